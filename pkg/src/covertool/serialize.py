"""JSON schemas for graphs/ideals/bases/reports and the plain-text CAS export.

Graph input (one JSON object):

  labeled    {"n": 2, "edges": [["x1","y1"], [1, 2], ...]}
             n = number of pairs; vertices are x1..xn, y1..yn; an integer
             vertex v means x_v for 1 <= v <= n and y_{v-n} for n < v <= 2n.
  whisker    {"base_n": 2, "base_edges": [[1, 2]], "whisker": true}
             base vertices are 1..base_n; the whisker construction labels
             the result.
  unlabeled  {"vertices": 5, "edges": [[1, 2], [2, 3]]}
             plain graph on vertices 1..N (named x1..xN), no pairing.

Every emitted document carries a "schema" field.
"""

import json
import sys

from .errors import ArgumentError
from .graphs import Graph, whisker
from .rings import format_mono

SCHEMAS = {
    "graph": "covertool/graph@1",
    "ideal": "covertool/ideal@1",
    "basis": "covertool/basis@1",
    "betti": "covertool/betti@1",
    "trace": "covertool/trace@1",
    "depth": "covertool/depth@1",
    "covers": "covertool/covers@1",
    "cmvwc": "covertool/cmvwc-report@1",
    "certificate": "covertool/normality-certificate@1",
    "ass": "covertool/associated-primes@1",
    "persistence": "covertool/persistence@1",
    "exchange": "covertool/exchange-report@1",
    "structure": "covertool/structure-report@1",
    "scan-line": "covertool/scan-instance@1",
    "scan-aggregate": "covertool/scan-aggregate@1",
}


# -- graph input --------------------------------------------------------------

def parse_input(source):
    """Graph from a JSON file path, '-' for stdin, or an already-parsed dict."""
    if isinstance(source, dict):
        return parse_graph_data(source)
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArgumentError(f"malformed JSON in {source}: {exc}") from exc
    if not isinstance(obj, dict):
        raise ArgumentError("graph JSON must be an object")
    return parse_graph_data(obj)


def parse_graph_data(obj):
    if obj.get("whisker"):
        base_n = _int_field(obj, "base_n", minimum=0)
        edges = [_base_edge(e, base_n, pos) for pos, e in
                 enumerate(obj.get("base_edges", []))]
        return whisker(Graph.from_edges(base_n, edges))
    if "n" in obj:
        n = _int_field(obj, "n", minimum=0)
        labels = [("x", i + 1) for i in range(n)] + [("y", i + 1) for i in range(n)]
        edges = [_labeled_edge(e, n, pos) for pos, e in
                 enumerate(obj.get("edges", []))]
        return Graph.from_edges(2 * n, edges, labels)
    if "vertices" in obj:
        nv = _int_field(obj, "vertices", minimum=0)
        edges = [_base_edge(e, nv, pos) for pos, e in
                 enumerate(obj.get("edges", []))]
        return Graph.from_edges(nv, edges)
    raise ArgumentError("graph JSON needs one of the keys 'n', 'vertices' or 'whisker'")


def _int_field(obj, key, minimum):
    v = obj.get(key)
    if not isinstance(v, int) or v < minimum:
        raise ArgumentError(f"field {key!r} must be an integer >= {minimum}, got {v!r}")
    return v


def _base_edge(e, n, pos):
    if not isinstance(e, (list, tuple)) or len(e) != 2:
        raise ArgumentError(f"edge #{pos} must be a pair, got {e!r}")
    out = []
    for v in e:
        if not isinstance(v, int) or not 1 <= v <= n:
            raise ArgumentError(f"edge #{pos}: vertex {v!r} not in 1..{n}")
        out.append(v - 1)
    return tuple(out)


def _labeled_edge(e, n, pos):
    if not isinstance(e, (list, tuple)) or len(e) != 2:
        raise ArgumentError(f"edge #{pos} must be a pair, got {e!r}")
    return tuple(_labeled_vertex(v, n, pos) for v in e)


def _labeled_vertex(v, n, pos):
    if isinstance(v, str):
        cls, idx = v[:1], v[1:]
        if cls not in ("x", "y") or not idx.isdigit() or not 1 <= int(idx) <= n:
            raise ArgumentError(f"edge #{pos}: bad vertex name {v!r} for n={n}")
        i = int(idx)
        return i - 1 if cls == "x" else n + i - 1
    if isinstance(v, int) and 1 <= v <= 2 * n:
        return v - 1 if v <= n else n + (v - n) - 1
    raise ArgumentError(f"edge #{pos}: vertex {v!r} not in 1..{2 * n}")


def graph_to_json(g):
    doc = {"schema": SCHEMAS["graph"]}
    if g.labels is not None:
        doc["n"] = g.n_pairs
        doc["edges"] = [[g.vertex_name(u), g.vertex_name(v)] for u, v in g.edge_list()]
    else:
        doc["vertices"] = g.n_vertices
        doc["edges"] = [[u + 1, v + 1] for u, v in g.edge_list()]
    return doc


# -- outputs ------------------------------------------------------------------

def ideal_to_json(ideal):
    doc = {
        "schema": SCHEMAS["ideal"],
        "vars": list(ideal.ring.names),
        "gens": [list(g) for g in ideal.gens],
        "text": ideal.gen_strings(),
    }
    if ideal.masks is not None:
        doc["masks"] = [sorted(m) for m in ideal.masks]
    return doc


def basis_to_json(gb):
    return {
        "schema": SCHEMAS["basis"],
        "vars": list(gb.ring.names),
        "reduced": gb.reduced,
        "elements": [{"lead": list(b.lead), "trail": list(b.trail),
                      "text": b.text(gb.ring)} for b in gb.elements],
    }


def betti_to_json(table):
    return {
        "schema": SCHEMAS["betti"],
        "vars": list(table.ring.names),
        "entries": [{"i": i, "degree": list(a),
                     "monomial": format_mono(table.ring, a), "value": v}
                    for (i, a), v in table.entries],
    }


def trace_to_json(trace):
    ring = trace.ring
    doc = {
        "schema": SCHEMAS["trace"],
        "order": trace.order.name,
        "ok": trace.ok,
        "gens": [format_mono(ring, u) for u in trace.sorted_gens],
        "set_u": [None if s is None else [ring.names[v] for v in s]
                  for s in trace.set_u],
    }
    if not trace.ok:
        doc["fail_index"] = trace.fail_index
        doc["fail_witness"] = format_mono(ring, trace.fail_witness)
    return doc


def depth_to_json(report):
    return {
        "schema": SCHEMAS["depth"],
        "rows": [{"k": k, "depth": d} for k, d in report.rows],
        "dstab_observed": report.dstab_observed,
        "limit_observed": report.limit_observed,
    }


def covers_to_json(g, report):
    return {
        "schema": SCHEMAS["covers"],
        "covers": [sorted(g.vertex_name(v) for v in c) for c in report.covers],
        "well_covered": report.well_covered,
        "very_well_covered": report.very_well_covered,
    }


def cmvwc_to_json(g, report):
    return {
        "schema": SCHEMAS["cmvwc"],
        "passed": report.passed,
        "violations": [{"condition": cid,
                        "witness": [g.vertex_name(v) for v in w]}
                       for cid, w in report.violations],
    }


def certificate_to_json(cert, ring=None):
    doc = {
        "schema": SCHEMAS["certificate"],
        "method": cert.method,
        "verdict": cert.verdict,
        "checked_k": list(cert.checked_k),
        "criteria": list(cert.criteria),
    }
    if cert.witness is not None:
        witness, k = cert.witness
        doc["witness"] = {"monomial": format_mono(ring, witness) if ring else list(witness),
                          "k": k}
    if cert.tree is not None:
        doc["tree"] = cert.tree
    return doc


def ass_to_json(ass):
    return {
        "schema": SCHEMAS["ass"],
        "primes": [list(p) for p in ass.names()],
    }


def persistence_to_json(ring, report):
    return {
        "schema": SCHEMAS["persistence"],
        "passed": report.passed,
        "chain": [[sorted(ring.names[v] for v in p) for p in primes]
                  for primes in report.chain],
        "first_violation": None if report.first_violation is None else {
            "k": report.first_violation[0],
            "prime": sorted(ring.names[v] for v in report.first_violation[1])},
    }


def exchange_to_json(report):
    doc = {
        "schema": SCHEMAS["exchange"],
        "passed": report.passed,
        "checked_pairs": report.checked_pairs,
    }
    if report.witness is not None:
        n_deg, left, right, j = report.witness
        doc["witness"] = {"degree": n_deg, "left": list(left),
                          "right": list(right), "position": j}
    return doc


def structure_to_json(gb, report):
    return {
        "schema": SCHEMAS["structure"],
        "cor411_form": report.cor411_form,
        "quadratic": report.quadratic,
        "max_degree": report.max_degree,
        "mixed": [b.text(gb.ring) for b in report.mixed],
        "pure_t": [b.text(gb.ring) for b in report.pure_t],
        "exceptions": [b.text(gb.ring) for b in report.exceptions],
    }


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def dumps_line(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


# -- CAS export ---------------------------------------------------------------

def export_cas(obj, path):
    """Plain-text ring + generator declarations, one item per line,
    byte-stable.  Accepts a MonomialIdeal or a GroebnerBasis."""
    lines = ["ring " + " ".join(obj.ring.names)]
    if hasattr(obj, "gens"):
        gens = obj.gen_strings()
        lines.append(f"ideal {len(gens)}")
        lines.extend(gens if gens else ["0"])
    elif hasattr(obj, "elements"):
        lines.append(f"basis {len(obj.elements)}")
        lines.extend(b.text(obj.ring) for b in obj.elements)
        if not obj.elements:
            lines.append("0")
    else:
        raise ArgumentError(f"cannot export object of type {type(obj).__name__}")
    text = "\n".join(lines) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
