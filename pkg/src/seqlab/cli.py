"""Command-line front end: generate sequences, compute profiles, run the
claim verifiers and conjecture scans, emit CSV or JSON.

Output is a pure function of the arguments and input files; repeated runs
are byte-identical. Exit codes: 0 all pass or complete, 1 a verifier
failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import adic, generators, maxorder, measures, numtheory, relations
from .config import oracle_bound
from .errors import (
    BoundExceeded,
    InvalidParameter,
    MissingParameter,
    ParseError,
    SeqLabError,
)
from .generators import PolySpec, SeqSpec
from .seqcore import write_bits

# ---------------------------------------------------------------------------
# sequence spec grammar: NAME(:key=value(,key=value)*)?(@poly=EXPR)?

_ALLOWED_KEYS = {
    "zero": frozenset(),
    "ones": frozenset(),
    "thue-morse": frozenset(),
    "pattern": frozenset({"k"}),
    "rudin-shapiro": frozenset(),
    "zeckendorf": frozenset(),
    "legendre": frozenset({"p", "f"}),
    "ell": frozenset({"q", "A"}),
    "lfsr": frozenset({"taps", "seed"}),
    "file": frozenset({"path"}),
}

_INT_KEYS = frozenset({"k", "p", "q", "A"})
_LIST_KEYS = frozenset({"taps", "seed"})


def parse_poly(text: str, offset: int = 0) -> PolySpec:
    """Univariate integer polynomial in n, e.g. "n^2" or "n^3+2*n".

    offset shifts reported error positions into the surrounding spec string.
    """
    if not text:
        raise ParseError(text, offset, "empty polynomial")
    i = 0
    end = len(text)
    coeffs: dict[int, int] = {}
    while True:
        sign = 1
        if i < end and text[i] in "+-":
            if text[i] == "-":
                sign = -1
            i += 1
        start = i
        coeff = None
        if i < end and text[i].isdigit():
            j = i
            while j < end and text[j].isdigit():
                j += 1
            coeff = int(text[i:j])
            i = j
            if i < end and text[i] == "*":
                i += 1
                if i >= end or text[i] != "n":
                    raise ParseError(text, offset + i, "expected n after *")
        exp = 0
        if i < end and text[i] == "n":
            i += 1
            exp = 1
            if i < end and text[i] == "^":
                i += 1
                j = i
                while j < end and text[j].isdigit():
                    j += 1
                if j == i:
                    raise ParseError(text, offset + i, "expected exponent digits")
                exp = int(text[i:j])
                i = j
        if coeff is None and exp == 0:
            raise ParseError(text, offset + start, "expected a term")
        coeffs[exp] = coeffs.get(exp, 0) + sign * (1 if coeff is None else coeff)
        if i >= end:
            break
        if text[i] not in "+-":
            raise ParseError(text, offset + i, f"unexpected {text[i]!r}")
    degree = max(coeffs)
    return PolySpec(tuple(coeffs.get(e, 0) for e in range(degree + 1)))


def _parse_value(key: str, value: str, full: str, pos: int):
    if key in _INT_KEYS:
        if not value.isdigit():
            raise ParseError(full, pos, f"{key} must be a nonnegative integer")
        return int(value)
    if key in _LIST_KEYS:
        out = []
        for part in value.split("."):
            if not part.isdigit():
                raise ParseError(full, pos, f"{key} must be dot-separated integers")
            out.append(int(part))
        return tuple(out)
    if key == "f":
        return parse_poly(value, pos)
    return value  # path


def parse_seqspec(text: str) -> SeqSpec:
    """Parse and validate a sequence spec string."""
    if not text:
        raise ParseError(text, 0, "empty sequence spec")
    body = text
    poly = None
    at = text.find("@")
    if at != -1:
        if not text[at:].startswith("@poly="):
            raise ParseError(text, at, "expected @poly=")
        body = text[:at]
        poly = parse_poly(text[at + 6 :], at + 6)
    colon = body.find(":")
    name = body if colon == -1 else body[:colon]
    if name not in generators.FAMILIES:
        raise ParseError(text, 0, f"unknown family {name!r}")
    params: list[tuple[str, object]] = []
    if colon != -1:
        rest = body[colon + 1 :]
        if not rest:
            raise ParseError(text, colon + 1, "expected key=value")
        pos = colon + 1
        for item in rest.split(","):
            eq = item.find("=")
            if eq <= 0:
                raise ParseError(text, pos, "expected key=value")
            key, value = item[:eq], item[eq + 1 :]
            if key not in _ALLOWED_KEYS[name]:
                raise InvalidParameter(f"family {name!r} does not take {key}=")
            if not value:
                raise ParseError(text, pos + eq + 1, f"empty value for {key}")
            params.append((key, _parse_value(key, value, text, pos + eq + 1)))
            pos += len(item) + 1
    spec = SeqSpec(name, tuple(params), poly)
    _validate_spec(spec)
    return spec


def _require(spec: SeqSpec, key: str):
    value = spec.param(key)
    if value is None:
        raise MissingParameter(f"family {spec.family!r} needs {key}=")
    return value


def _validate_spec(spec: SeqSpec) -> None:
    """Family-specific parameter checks, before any computation."""
    fam = spec.family
    if fam == "pattern":
        k = _require(spec, "k")
        if k < 1:
            raise InvalidParameter(f"k must be positive, got {k}")
    elif fam == "legendre":
        p = _require(spec, "p")
        if p == 2 or not numtheory.is_prime(p):
            raise InvalidParameter(f"p must be an odd prime, got {p}")
        f = spec.param("f", generators.IDENTITY)
        if all(c % p == 0 for c in f.coefficients):
            raise InvalidParameter(f"f vanishes identically mod {p}")
    elif fam == "ell":
        q = _require(spec, "q")
        a = _require(spec, "A")
        if q < 3 or q % 2 == 0:
            raise InvalidParameter(f"q must be odd and at least 3, got {q}")
        if not 0 < a < q:
            raise InvalidParameter(f"A must lie in (0, q), got {a}")
        if math.gcd(a, q) != 1:
            raise InvalidParameter(f"A and q must be coprime, got gcd={math.gcd(a, q)}")
    elif fam == "lfsr":
        taps = _require(spec, "taps")
        seed = _require(spec, "seed")
        r = len(seed)
        if any(b not in (0, 1) for b in seed):
            raise InvalidParameter("seed must be bits")
        if not any(seed):
            raise InvalidParameter("seed must not be all zero")
        if not taps or any(not 0 <= t < r for t in taps):
            raise InvalidParameter(f"taps must lie in [0, {r})")
        if len(set(taps)) != len(taps):
            raise InvalidParameter("duplicate tap")
    elif fam == "file":
        _require(spec, "path")


# ---------------------------------------------------------------------------
# analyze

_MEASURE_ORDER = ("moc", "adic", "linear", "correlation", "expansion")
_MEASURE_COLUMNS = {
    "moc": ("moc",),
    "adic": ("mu", "log2_mu"),
    "linear": ("linear",),
    "correlation": ("corr2",),
    "expansion": ("expansion",),
}


def _parse_measures(text: str) -> tuple[str, ...]:
    names = tuple(part.strip() for part in text.split(","))
    for name in names:
        if name not in _MEASURE_ORDER:
            raise InvalidParameter(f"unknown measure {name!r}")
    # canonical column order regardless of how the list was written
    return tuple(m for m in _MEASURE_ORDER if m in names)


def _analyze_rows(spec: SeqSpec, nmax: int, names: tuple[str, ...]):
    w = generators.materialize(spec, nmax)
    columns = ["N"]
    for name in names:
        columns.extend(_MEASURE_COLUMNS[name])
    series: dict[str, list] = {}
    if "moc" in names:
        prof = maxorder.moc_profile(w)
        series["moc"] = [prof.at(n) for n in range(1, nmax + 1)]
    if "adic" in names:
        prof = adic.adic_profile(w)
        series["mu"] = [prof.at(n) for n in range(1, nmax + 1)]
        series["log2_mu"] = [f"{numtheory.int_log2(v):.6f}" for v in series["mu"]]
    if "linear" in names:
        prof = measures.linear_profile(w)
        series["linear"] = [prof.at(n) for n in range(1, nmax + 1)]
    if "correlation" in names:
        bound = oracle_bound("corr")
        if nmax > bound:
            raise BoundExceeded(f"nmax = {nmax} > correlation bound {bound}")
        # no pair of offsets fits in a length-1 window
        series["corr2"] = [0 if n < 2 else measures.correlation2(w[:n])[0] for n in range(1, nmax + 1)]
    if "expansion" in names:
        series["expansion"] = [measures.expansion_complexity(w, n) for n in range(1, nmax + 1)]
    rows = []
    for n in range(1, nmax + 1):
        row = [n]
        for col in columns[1:]:
            row.append(series[col][n - 1])
        rows.append(row)
    return columns, rows


def _analyze_text(spec: SeqSpec, nmax: int, names: tuple[str, ...], fmt: str) -> str:
    columns, rows = _analyze_rows(spec, nmax, names)
    if fmt == "json":
        payload = {
            "seq": spec.text(),
            "columns": columns,
            "rows": rows,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    buf = io.StringIO()
    buf.write(f"# seqlab-analyze-v1: {','.join(columns)}\n")
    buf.write(f"# seq={spec.text()}\n")
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# periodic

def _periodic_text(spec: SeqSpec, fmt: str) -> str:
    s = generators.periodic_sequence(spec)
    rep = adic.connection(s)
    phi = adic.phi2(s)
    sym = adic.phi2_symmetric(s)
    m = maxorder.moc_periodic(s)
    lin = measures.linear_complexity_periodic(s.word)
    if fmt == "json":
        payload = {
            "seq": spec.text(),
            "T": s.T,
            "A": rep.A,
            "q": rep.q,
            "phi2": f"{phi.log2:.6f}",
            "phi2_symmetric": f"{sym.log2:.6f}",
            "M": m,
            "L": lin,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    buf = io.StringIO()
    buf.write("# seqlab-periodic-v1: T,A,q,phi2,phi2_symmetric,M,L\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([s.T, rep.A, rep.q, f"{phi.log2:.6f}", f"{sym.log2:.6f}", m, lin])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# verify

_T_CLAIMS = {"thm2": 10, "lemma1": 8, "thm6": 12}


def _verify_reports(claim: str, t_max: int | None, n_max: int | None):
    if claim == "all":
        if t_max is not None or n_max is not None:
            raise InvalidParameter("claim 'all' runs every suite at its defaults")
        return relations.run_all()
    if claim in _T_CLAIMS:
        if n_max is not None:
            raise InvalidParameter(f"--nmax does not apply to {claim}")
        bound = t_max if t_max is not None else _T_CLAIMS[claim]
        suite = {
            "thm2": relations.thm2_suite,
            "lemma1": relations.lemma1_suite,
            "thm6": relations.thm6_suite,
        }[claim]
        return suite(bound)
    if t_max is not None:
        raise InvalidParameter(f"--exhaustive-T does not apply to {claim}")
    if claim == "lowerbound":
        return relations.lowerbound_suite(n_max if n_max is not None else 2000)
    if n_max is not None:
        raise InvalidParameter(f"--nmax does not apply to {claim}")
    return relations.CLAIMS[claim]()


# ---------------------------------------------------------------------------
# argument plumbing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqlab",
        description="complexity measures, sequence families and claim verifiers",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, seq=False, fmt=True):
        if seq:
            p.add_argument("--seq", required=True, help="sequence spec, e.g. ell:q=31,A=3")
        if fmt:
            p.add_argument("--format", choices=("csv", "json"), default="csv")
            p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("generate", help="write the first n bits of a sequence")
    add_common(p, seq=True, fmt=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("analyze", help="per-prefix profile of the chosen measures")
    add_common(p, seq=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--measures", default="moc,adic,linear", help="comma list: moc,adic,linear,correlation,expansion")

    p = sub.add_parser("periodic", help="one-line summary of a periodic sequence")
    add_common(p, seq=True)

    p = sub.add_parser("verify", help="run a claim verifier suite")
    p.add_argument("claim", choices=tuple(sorted(relations.CLAIMS)) + ("all",))
    p.add_argument("--exhaustive-T", dest="exhaustive_t", type=int, help="period bound for thm2/lemma1/thm6")
    p.add_argument("--nmax", type=int, help="length bound for lowerbound")
    add_common(p)

    p = sub.add_parser("tables", help="recompute a reference table and diff it")
    p.add_argument("--which", type=int, choices=(1, 2), required=True)
    add_common(p)

    p = sub.add_parser("scan", help="conjecture deviation scan over a sparse grid")
    add_common(p, seq=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--c", type=float, default=8.0, help="tolerance multiplier for c*log2(N)")
    p.add_argument("--grid-ratio", dest="grid_ratio", type=float, default=1.3)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as handle:
            handle.write(text)


def _reports_exit(reports, fmt: str, out: str | None) -> int:
    if fmt == "json":
        _emit(relations.reports_to_json(reports), out)
    else:
        _emit(relations.reports_to_csv(reports), out)
    return 0 if all(r.ok() for r in reports) else 1


def _dispatch(args) -> int:
    if args.verb == "generate":
        if args.n < 0:
            raise InvalidParameter(f"--n must be nonnegative, got {args.n}")
        w = generators.materialize(parse_seqspec(args.seq), args.n)
        if args.out is None:
            write_bits(w, sys.stdout)
        else:
            write_bits(w, args.out)
        return 0
    if args.verb == "analyze":
        if args.nmax < 1:
            raise InvalidParameter(f"--nmax must be positive, got {args.nmax}")
        names = _parse_measures(args.measures)
        spec = parse_seqspec(args.seq)
        _emit(_analyze_text(spec, args.nmax, names, args.format), args.out)
        return 0
    if args.verb == "periodic":
        _emit(_periodic_text(parse_seqspec(args.seq), args.format), args.out)
        return 0
    if args.verb == "verify":
        reports = _verify_reports(args.claim, args.exhaustive_t, args.nmax)
        return _reports_exit(reports, args.format, args.out)
    if args.verb == "tables":
        return _reports_exit(relations.reproduce_table(args.which), args.format, args.out)
    if args.verb == "scan":
        spec = parse_seqspec(args.seq)
        report = relations.conjecture_scan(spec, args.nmax, args.c, args.grid_ratio)
        if args.format == "json":
            _emit(relations.scan_to_json(report), args.out)
        else:
            _emit(relations.scan_to_csv(report), args.out)
        # conjecture scans are report-grade and never fail the run
        return 0
    raise AssertionError(f"unhandled verb {args.verb}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except SeqLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
