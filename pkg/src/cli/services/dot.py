from src.cw import CWComplex


def render_dot(complex: CWComplex) -> str:
    """
    Hasse diagram of the closure poset in DOT.

    One node per cell labelled ``C<id> dim=<k>``, nodes sorted by
    (dim, id), one edge per cover from the lower to the upper cell.
    """
    lines = ["digraph {", "  rankdir=BT;"]
    for c in sorted(complex.cells, key=lambda c: (c.dim, c.id)):
        lines.append(f'  C{c.id} [label="C{c.id} dim={c.dim}"];')
    for lower, upper in complex.hasse_edges():
        lines.append(f"  C{lower} -> C{upper};")
    lines.append("}")
    return "\n".join(lines) + "\n"
