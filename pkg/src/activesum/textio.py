"""Text formats for groups and families.

Group file::

    degree 4
    (0 1)(2 3)
    (0 1 2)

or a single named-constructor line such as ``sym 4`` or ``sl 3 2``.

Family file::

    family sym4
    (0 1)
    (0 1 2 3), (0 2)

one seed subgroup per line, generators separated by commas. The family is
the conjugation closure of the seeds in the ambient group.
"""

from pathlib import Path

from .catalog import named_group
from .errors import ParseError
from .families import conjugation_closure
from .groups import PermGroup, Subgroup
from .perm import format_cycles, parse_cycles


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_group_text(text, source=None):
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty group description", None, source)
    lineno, first = lines[0]
    parts = first.split()
    if parts[0] != "degree":
        if len(lines) > 1:
            raise ParseError("named constructor must be the only line", lines[1][0], source)
        try:
            return named_group(" ".join(parts))
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc), lineno, source) from None
    if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
        raise ParseError("expected 'degree <positive integer>'", lineno, source)
    degree = int(parts[1])
    gens = []
    for lineno, line in lines[1:]:
        try:
            gens.append(parse_cycles(line, degree))
        except ParseError as exc:
            raise ParseError(str(exc), lineno, source) from None
    return PermGroup(gens, degree=degree, name=Path(source).stem if source else None)


def format_group(G):
    return "\n".join([f"degree {G.degree}"] + [format_cycles(g) for g in G.generators]) + "\n"


def parse_perm_list(text, degree, lineno=None, source=None):
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            out.append(parse_cycles(chunk, degree))
        except ParseError as exc:
            raise ParseError(str(exc), lineno, source) from None
    if not out:
        raise ParseError("no permutations given", lineno, source)
    return out


def parse_family_text(text, source=None, ambient=None):
    """Parse a family file; returns (ambient group, family)."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty family file", None, source)
    lineno, header = lines[0]
    parts = header.split(None, 1)
    if parts[0] != "family" or len(parts) != 2:
        raise ParseError("first line must be 'family <ambient-name>'", lineno, source)
    if ambient is None:
        try:
            ambient = named_group(parts[1])
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc), lineno, source) from None
    seeds = []
    for lineno, line in lines[1:]:
        gens = parse_perm_list(line, ambient.degree, lineno, source)
        for g in gens:
            if not ambient.contains(g):
                raise ParseError(f"{format_cycles(g)} is not in the ambient group", lineno, source)
        seeds.append(Subgroup(ambient, gens))
    if not seeds:
        raise ParseError("family file lists no seed subgroups", None, source)
    return ambient, conjugation_closure(ambient, seeds)


def format_family(fam, ambient_name):
    lines = [f"family {ambient_name}"]
    for F in fam.members:
        lines.append(", ".join(format_cycles(g) for g in F.generators) or "()")
    return "\n".join(lines) + "\n"
