"""Line-oriented instance documents (.mmaf) and their round-trip serializer.

Grammar, one directive per line, `#` starting a comment anywhere:

    arg <id> <acc_may> <acc_must> <rej_may> <rej_must>
    arg <id> dung
    arg <id> ratio <acc_may> <acc_must> <rej_may> <rej_must> [floor <k>]
    att <src> <dst>

`dung` gives the argument the tuple ((indegree, indegree), (1, 1)); `ratio`
scales four exact fractions (decimals or p/q) by the in-degree. Both resolve
after the whole document is read, so they see the final attack relation and
declarations may reference arguments in any order.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MmafSyntaxError
from .framework import Framework, NuanceTuple, ratio_tuple


def _natural(token: str, line_no: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise MmafSyntaxError(line_no, f"{what} must be an integer, got {token!r}") from None
    if value < 0:
        raise MmafSyntaxError(line_no, f"{what} must be >= 0, got {value}")
    return value


def _fraction(token: str, line_no: int, what: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise MmafSyntaxError(
            line_no, f"{what} must be an exact rational, got {token!r}"
        ) from None


def parse_mmaf(text: str) -> Framework:
    """Parse a document into a Framework.

    Syntax problems raise MmafSyntaxError with the line number; semantic
    problems (duplicate ids, unknown attack endpoints, scales out of order)
    raise their dedicated error types.
    """
    declared: list[tuple[str, tuple]] = []  # (id, pending tuple recipe)
    attacks: list[tuple[str, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "arg":
            if len(tokens) < 2:
                raise MmafSyntaxError(line_no, "arg needs an identifier")
            arg_id = tokens[1]
            rest = tokens[2:]
            if len(rest) == 4:
                declared.append(
                    (
                        arg_id,
                        (
                            "plain",
                            tuple(
                                _natural(t, line_no, "tuple entry") for t in rest
                            ),
                        ),
                    )
                )
            elif rest == ["dung"]:
                declared.append((arg_id, ("dung",)))
            elif rest and rest[0] == "ratio":
                frac_tokens = rest[1:]
                floor = 1
                if len(frac_tokens) == 6 and frac_tokens[4] == "floor":
                    floor = _natural(frac_tokens[5], line_no, "floor")
                    frac_tokens = frac_tokens[:4]
                if len(frac_tokens) != 4:
                    raise MmafSyntaxError(
                        line_no, "ratio needs four fractions and an optional 'floor <k>'"
                    )
                fracs = tuple(
                    _fraction(t, line_no, "ratio fraction") for t in frac_tokens
                )
                declared.append((arg_id, ("ratio", fracs, floor)))
            else:
                raise MmafSyntaxError(
                    line_no,
                    "arg takes four tuple entries, 'dung', or a 'ratio' clause",
                )
        elif kind == "att":
            if len(tokens) != 3:
                raise MmafSyntaxError(line_no, "att takes exactly two identifiers")
            attacks.append((tokens[1], tokens[2]))
        else:
            raise MmafSyntaxError(line_no, f"unknown directive {kind!r}")

    distinct = set(attacks)
    indegree = {arg_id: 0 for arg_id, _ in declared}
    for _, dst in distinct:
        if dst in indegree:
            indegree[dst] += 1

    arguments = []
    for arg_id, recipe in declared:
        if recipe[0] == "plain":
            am, aM, rm, rM = recipe[1]
            arguments.append((arg_id, NuanceTuple(am, aM, rm, rM)))
        elif recipe[0] == "dung":
            d = indegree.get(arg_id, 0)
            arguments.append((arg_id, NuanceTuple(d, d, 1, 1)))
        else:
            _, fracs, floor = recipe
            arguments.append(
                (arg_id, ratio_tuple(indegree.get(arg_id, 0), *fracs, rej_floor=floor))
            )
    return Framework(arguments, attacks)


def serialize_mmaf(f: Framework) -> str:
    """Render a framework as a document; parse(serialize(f)) == f.

    Tuples are always written out concretely, so directives do not survive a
    round trip, but the framework they denote does.
    """
    for arg_id in f.ids:
        if not arg_id or any(c.isspace() for c in arg_id) or "#" in arg_id:
            raise ValueError(f"identifier {arg_id!r} cannot be serialized")
    lines = [
        f"arg {a} {t.acc_may} {t.acc_must} {t.rej_may} {t.rej_must}"
        for a, t in zip(f.ids, f.tuples)
    ]
    lines.extend(f"att {src} {dst}" for src, dst in f.attack_pairs())
    return "\n".join(lines) + "\n"
