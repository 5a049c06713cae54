"""Plain-text exchange format.

    algebra <name>
    dim <n>
    scalars rational|complex
    kind dialgebra|dendriform|zinbiel|dipterous [left|right]   (optional)
    alpha <i> <j> <value>        coefficient of e_i in alpha(e_j)
    left <i> <j> <k> <value>     coefficient of e_k in e_i . e_j
    right <i> <j> <k> <value>
    end

`#` starts a comment anywhere on a line; blank lines are ignored; unlisted
coefficients are zero; indices are 1-based.  The optional `kind` directive
(default dialgebra) decides what the product lines mean: dendriform reads
them as (prec, succ), zinbiel allows only `left` (the single product), and
dipterous reads `right` as the associative-style product and `left` as its
side operation, with the mandatory side token naming which identity family
applies.  Every parse error carries the 1-based line number.
"""

from . import scalars
from .catalog import Satellite
from .core import LEFT, RIGHT, HomDialgebra, LinearMap, MultTable

KINDS = ("dialgebra", "dendriform", "zinbiel", "dipterous")


class FileFormatError(ValueError):

    def __init__(self, lineno, message):
        self.lineno = lineno
        self.message = message
        super().__init__("line %d: %s" % (lineno, message))


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok, lineno, what):
    try:
        return int(tok)
    except ValueError:
        raise FileFormatError(lineno, "%s must be an integer, got %r" % (what, tok))


def _index(tok, lineno, n, what):
    v = _int(tok, lineno, what)
    if not 1 <= v <= n:
        raise FileFormatError(lineno, "%s %d out of range 1..%d" % (what, v, n))
    return v


def _value(tok, lineno, backend):
    try:
        return scalars.parse_scalar(tok, backend)
    except (ValueError, ZeroDivisionError) as exc:
        raise FileFormatError(
            lineno, "bad %s value %r (%s)" % (backend, tok, exc))


def parse(text):
    """Parse one algebra. Returns HomDialgebra or Satellite by `kind`."""
    stream = _lines(text)
    header = [("algebra", 1), ("dim", 1), ("scalars", 1)]
    values = {}
    for key, argc in header:
        try:
            lineno, toks = next(stream)
        except StopIteration:
            raise FileFormatError(len(text.splitlines()) + 1,
                                  "missing %r header line" % key)
        if toks[0] != key:
            raise FileFormatError(lineno, "expected %r line, got %r"
                                  % (key, toks[0]))
        if len(toks) != 1 + argc:
            raise FileFormatError(lineno, "%r takes %d argument(s)" % (key, argc))
        values[key] = (lineno, toks[1:])
    name = values["algebra"][1][0]
    n = _int(values["dim"][1][0], values["dim"][0], "dim")
    if n < 1:
        raise FileFormatError(values["dim"][0], "dim must be >= 1, got %d" % n)
    backend = values["scalars"][1][0]
    if backend not in (scalars.RATIONAL, scalars.COMPLEX):
        raise FileFormatError(values["scalars"][0],
                              "scalars must be rational or complex, got %r"
                              % backend)

    kind = "dialgebra"
    side = None
    left, right, alpha = {}, {}, {}
    seen_end = False
    first = True
    for lineno, toks in stream:
        word = toks[0]
        if first and word == "kind":
            if len(toks) not in (2, 3):
                raise FileFormatError(lineno, "'kind' takes the kind name and,"
                                      " for dipterous, a side")
            kind = toks[1]
            if kind not in KINDS:
                raise FileFormatError(lineno, "unknown kind %r (one of %s)"
                                      % (kind, ", ".join(KINDS)))
            if kind == "dipterous":
                if len(toks) != 3 or toks[2] not in (LEFT, RIGHT):
                    raise FileFormatError(
                        lineno, "kind dipterous needs a side: left or right")
                side = toks[2]
            elif len(toks) == 3:
                raise FileFormatError(lineno, "only dipterous takes a side")
            first = False
            continue
        first = False
        if word == "end":
            if len(toks) != 1:
                raise FileFormatError(lineno, "'end' takes no arguments")
            seen_end = True
            for extra_lineno, extra in stream:
                raise FileFormatError(extra_lineno,
                                      "content after 'end': %r" % extra[0])
            break
        if word == "alpha":
            if len(toks) != 4:
                raise FileFormatError(lineno, "'alpha' takes i j value")
            i = _index(toks[1], lineno, n, "index")
            j = _index(toks[2], lineno, n, "index")
            if (i, j) in alpha:
                raise FileFormatError(lineno, "duplicate alpha entry (%d, %d)"
                                      % (i, j))
            alpha[(i, j)] = _value(toks[3], lineno, backend)
        elif word in ("left", "right"):
            if word == "right" and kind == "zinbiel":
                raise FileFormatError(lineno, "zinbiel has a single product;"
                                      " 'right' lines are not allowed")
            if len(toks) != 5:
                raise FileFormatError(lineno, "%r takes i j k value" % word)
            i = _index(toks[1], lineno, n, "index")
            j = _index(toks[2], lineno, n, "index")
            k = _index(toks[3], lineno, n, "index")
            tab = left if word == "left" else right
            if (i, j, k) in tab:
                raise FileFormatError(lineno, "duplicate %s entry (%d, %d, %d)"
                                      % (word, i, j, k))
            tab[(i, j, k)] = _value(toks[4], lineno, backend)
        else:
            raise FileFormatError(lineno, "unknown directive %r" % word)
    if not seen_end:
        raise FileFormatError(len(text.splitlines()) + 1,
                              "missing 'end' terminator")

    def table(entries):
        out = {}
        for (i, j, k), v in entries.items():
            out.setdefault((i, j), {})[k] = v
        return MultTable.from_entries(n, out, backend)

    amap = {}
    for (i, j), v in alpha.items():
        amap.setdefault(j, {})[i] = v
    alpha_map = LinearMap.from_entries(n, amap, backend)
    if kind == "dialgebra":
        return HomDialgebra(name, table(left), table(right), alpha_map)
    if kind == "dendriform":
        ops = {"prec": table(left), "succ": table(right)}
    elif kind == "zinbiel":
        ops = {"circ": table(left)}
    else:
        ops = {("succ" if side == LEFT else "prec"): table(left),
               "star": table(right)}
    return Satellite(name, kind, n, ops, alpha_map, side=side)


def _op_tables(obj):
    """(left-slot table, right-slot table or None, kind, side)."""
    if isinstance(obj, HomDialgebra):
        return obj.left, obj.right, "dialgebra", None
    if obj.kind == "dendriform":
        return obj.ops["prec"], obj.ops["succ"], "dendriform", None
    if obj.kind == "zinbiel":
        return obj.ops["circ"], None, "zinbiel", None
    other = obj.ops["succ" if obj.side == LEFT else "prec"]
    return other, obj.ops["star"], "dipterous", obj.side


def serialize(obj):
    """Canonical text form; sorted entries, zeros omitted."""
    left, right, kind, side = _op_tables(obj)
    out = ["algebra %s" % obj.name,
           "dim %d" % obj.n,
           "scalars %s" % obj.backend]
    if kind != "dialgebra":
        out.append("kind %s%s" % (kind, " " + side if side else ""))
    for i, j, v in obj.alpha.entries():
        out.append("alpha %d %d %s" % (i, j, scalars.format_scalar(v)))
    for word, tab in (("left", left), ("right", right)):
        if tab is None:
            continue
        for i, j, k, v in tab.entries():
            out.append("%s %d %d %d %s" % (word, i, j, k,
                                           scalars.format_scalar(v)))
    out.append("end")
    return "\n".join(out) + "\n"


def load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def save(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(obj))
