"""Line-oriented text formats for graphs, colorings, subset colorings,
and witness certificates.

Graph:
    bipartite <left_count> <right_count>
    rlabel <index> <comma-separated-ints>     (subset-labeled rights only)
    e <left> <right_index>

Rights default to the opaque label equal to their 1-based index; rlabel
lines replace a right's label with a subset.  Edge coloring (always read
against a known graph; totality is validated on load):
    c <left> <right_index> <R|B>

Subset coloring:
    subsetcoloring <n> <arity> <palette>
    sc <comma-separated subset> <value>

Witness certificate (self-contained: host, optional coloring, pattern,
and the mapping, so a certificate file can be checked on its own):
    host
    <graph lines>
    coloring
    <c lines>
    pattern
    <graph lines>
    witness <R|B|->
    wleft <pattern_left> <host_left>
    wright <pattern_right> <host label: int or comma-separated ints>

Blank lines and lines starting with '#' are ignored everywhere.
"""

from math import comb

from .errors import ValidationError
from .graphs import (
    Color,
    EdgeColoring,
    InducedCopyWitness,
    make_graph,
)
from .hypergraph import SubsetColoring


def _content_lines(text):
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def _parse_subset(token):
    try:
        return tuple(int(x) for x in token.split(","))
    except ValueError:
        raise ValidationError(f"bad subset token {token!r}")


def _format_label(label):
    if isinstance(label, tuple):
        return ",".join(str(x) for x in label)
    return str(label)


# -- graphs ------------------------------------------------------------


def graph_to_text(graph):
    lines = [f"bipartite {graph.left_count} {len(graph.right_labels)}"]
    for idx, label in enumerate(graph.right_labels, 1):
        if isinstance(label, tuple):
            lines.append(f"rlabel {idx} {_format_label(label)}")
    for left, label in graph.sorted_edges():
        lines.append(f"e {left} {graph.right_index(label)}")
    return "\n".join(lines) + "\n"


def graph_from_text(text):
    lines = list(_content_lines(text))
    return _parse_graph(lines)


def _parse_graph(lines):
    if not lines or not lines[0].startswith("bipartite"):
        raise ValidationError("graph text must start with a 'bipartite' header")
    header = lines[0].split()
    if len(header) != 3:
        raise ValidationError(f"bad graph header {lines[0]!r}")
    try:
        left_count, right_count = int(header[1]), int(header[2])
    except ValueError:
        raise ValidationError(f"bad graph header {lines[0]!r}")
    labels = {i: i for i in range(1, right_count + 1)}
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if parts[0] == "rlabel" and len(parts) == 3:
            idx = int(parts[1])
            if not 1 <= idx <= right_count:
                raise ValidationError(f"rlabel index {idx} out of range")
            labels[idx] = _parse_subset(parts[2])
        elif parts[0] == "e" and len(parts) == 3:
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ValidationError(f"unrecognized graph line {line!r}")
    right_labels = tuple(labels[i] for i in range(1, right_count + 1))
    try:
        resolved = frozenset((left, right_labels[idx - 1]) for left, idx in edges)
    except IndexError:
        raise ValidationError("edge references a right index out of range")
    if any(idx < 1 for _, idx in edges):
        raise ValidationError("edge references a right index out of range")
    return make_graph(left_count, right_labels, resolved)


# -- edge colorings ----------------------------------------------------


def coloring_to_text(coloring):
    graph = coloring.graph
    lines = []
    for left, label in graph.sorted_edges():
        letter = coloring.color_of(left, label).letter
        lines.append(f"c {left} {graph.right_index(label)} {letter}")
    return "\n".join(lines) + "\n"


def coloring_from_text(text, graph):
    colors = {}
    for line in _content_lines(text):
        parts = line.split()
        if len(parts) != 4 or parts[0] != "c":
            raise ValidationError(f"unrecognized coloring line {line!r}")
        left, idx = int(parts[1]), int(parts[2])
        label = graph.label_at(idx)
        edge = (left, label)
        if edge in colors:
            raise ValidationError(f"duplicate coloring line for edge ({left}, {idx})")
        colors[edge] = Color.from_letter(parts[3])
    return EdgeColoring(graph, colors)  # totality validated on construction


def infer_complete_host(text):
    """Reconstruct K_{n,k} from a total coloring file of a complete host."""
    from .constructions import complete_bipartite

    n = k = 0
    for line in _content_lines(text):
        parts = line.split()
        if len(parts) == 4 and parts[0] == "c":
            n = max(n, int(parts[1]))
            k = max(k, int(parts[2]))
    if n < 1 or k < 1:
        raise ValidationError("coloring file contains no coloring lines")
    return complete_bipartite(n, k)


def infer_set_host(text, k):
    """Reconstruct B_{n,k} from a total coloring file of a set-membership host."""
    from .constructions import set_bipartite

    n = 0
    count = 0
    for line in _content_lines(text):
        parts = line.split()
        if len(parts) == 4 and parts[0] == "c":
            n = max(n, int(parts[1]))
            count += 1
    if n < k:
        raise ValidationError(f"coloring file too small for a set graph of arity {k}")
    if count != k * comb(n, k):
        raise ValidationError(
            f"coloring has {count} lines, a total coloring of B_({n},{k}) needs {k * comb(n, k)}"
        )
    return set_bipartite(n, k)


# -- subset colorings ---------------------------------------------------


def subset_coloring_to_text(sc):
    lines = [f"subsetcoloring {sc.n} {sc.arity} {sc.palette_size}"]
    for subset, value in sc.items():
        lines.append(f"sc {_format_label(subset)} {value}")
    return "\n".join(lines) + "\n"


def subset_coloring_from_text(text):
    lines = list(_content_lines(text))
    if not lines or not lines[0].startswith("subsetcoloring"):
        raise ValidationError("subset-coloring text must start with a 'subsetcoloring' header")
    header = lines[0].split()
    if len(header) != 4:
        raise ValidationError(f"bad subset-coloring header {lines[0]!r}")
    n, arity, palette = (int(x) for x in header[1:])
    mapping = {}
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] != "sc":
            raise ValidationError(f"unrecognized subset-coloring line {line!r}")
        subset = _parse_subset(parts[1])
        if subset in mapping:
            raise ValidationError(f"duplicate subset {subset}")
        mapping[subset] = int(parts[2])
    return SubsetColoring.from_map(n, arity, palette, mapping)


# -- witness certificates -----------------------------------------------


def certificate_to_text(host, witness, coloring=None):
    parts = ["host\n", graph_to_text(host)]
    if coloring is not None:
        parts.append("coloring\n")
        parts.append(coloring_to_text(coloring))
    parts.append("pattern\n")
    parts.append(graph_to_text(witness.pattern))
    claimed = witness.claimed_color.letter if witness.claimed_color is not None else "-"
    parts.append(f"witness {claimed}\n")
    for i, host_left in enumerate(witness.host_left, 1):
        parts.append(f"wleft {i} {host_left}\n")
    for j, label in enumerate(witness.host_right, 1):
        parts.append(f"wright {j} {_format_label(label)}\n")
    return "".join(parts)


def certificate_from_text(text):
    """Parse a certificate; returns (host, coloring_or_None, witness)."""
    sections = {}
    order = []
    current = None
    claimed = None
    for line in _content_lines(text):
        first = line.split()[0]
        if first in ("host", "coloring", "pattern", "witness"):
            if first in sections:
                raise ValidationError(f"duplicate certificate section {first!r}")
            if first == "witness":
                parts = line.split()
                if len(parts) != 2 or parts[1] not in ("R", "B", "-"):
                    raise ValidationError(f"bad witness section header {line!r}")
                claimed = None if parts[1] == "-" else Color.from_letter(parts[1])
            current = first
            sections[current] = []
            order.append(current)
            continue
        if current is None:
            raise ValidationError(f"certificate line {line!r} outside any section")
        sections[current].append(line)
    for required in ("host", "pattern", "witness"):
        if required not in sections:
            raise ValidationError(f"certificate is missing the {required!r} section")

    host = _parse_graph(sections["host"])
    pattern = _parse_graph(sections["pattern"])
    coloring = None
    if "coloring" in sections:
        coloring = coloring_from_text("\n".join(sections["coloring"]), host)

    lefts = {}
    rights = {}
    for line in sections["witness"]:
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("wleft", "wright"):
            raise ValidationError(f"unrecognized witness line {line!r}")
        index = int(parts[1])
        if parts[0] == "wleft":
            if index in lefts:
                raise ValidationError(f"duplicate wleft {index}")
            lefts[index] = int(parts[2])
        else:
            if index in rights:
                raise ValidationError(f"duplicate wright {index}")
            token = parts[2]
            rights[index] = _parse_subset(token) if "," in token else int(token)
    if sorted(lefts) != list(range(1, pattern.left_count + 1)):
        raise ValidationError("wleft lines must cover pattern lefts 1..c exactly")
    if sorted(rights) != list(range(1, len(pattern.right_labels) + 1)):
        raise ValidationError("wright lines must cover pattern rights 1..d exactly")

    host_right = []
    for j in range(1, len(pattern.right_labels) + 1):
        label = rights[j]
        # A single int names an opaque label; resolve it against subset-labeled
        # hosts as a 1-element subset if needed.
        if isinstance(label, int) and not host.has_right_label(label):
            if host.has_right_label((label,)):
                label = (label,)
        host_right.append(label)
    witness = InducedCopyWitness(
        pattern=pattern,
        host_left=tuple(lefts[i] for i in range(1, pattern.left_count + 1)),
        host_right=tuple(host_right),
        claimed_color=claimed,
    )
    return host, coloring, witness


# -- small file helpers --------------------------------------------------


def save_text(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def load_text(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()
