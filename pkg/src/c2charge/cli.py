"""Command-line front end.

    c2charge crystal   --lambda 0,1
    c2charge decompose --lambda 0,3 --format json
    c2charge kostka    --lambda 2,2 [--mu 0,1]
    c2charge graph     --lambda 2,2 [--m 7]
    c2charge verify    [--bound 4] [--jobs 4]

Exit codes: 0 ok, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bruhat as G
from . import charge as C
from . import decomposition as D
from . import strings as S
from . import tableaux as T
from . import verify as V
from .kostka import dominant_below, kostka_foulkes
from .roots import Weight, weights_below

SCHEMA = "c2charge/1"
EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_weight(text):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'l1,l2', got {text!r}") from None
    return Weight(a, b)


def _dominant(lam):
    if lam is None:
        raise UsageError("--lambda is required")
    if not lam.is_dominant():
        raise UsageError(f"lambda {tuple(lam)} is not dominant")
    return lam


def _poly(p):
    """Laurent polynomial as [[exponent, coefficient], ...]."""
    return [[e, c] for e, c in p.sorted_terms()]


# ----------------------------------------------------------------------------
# table rendering


def render(lam, columns, rows, fmt, extra=None):
    if fmt == "json":
        doc = {"lambda": list(lam), "rows": rows, "schema": SCHEMA}
        doc.update(extra or {})
        return _json_lines(doc)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_flat(r[c]) for c in columns])
        return buf.getvalue()
    widths = [max([len(c)] + [len(_flat(r[c])) for r in rows]) for c in columns]
    lines = ["  ".join(c.ljust(n) for c, n in zip(columns, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(_flat(r[c]).ljust(n) for c, n in zip(columns, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _json_lines(doc):
    """JSON with one list entry per line, for readable diffs."""
    parts = []
    for key, value in doc.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            body = ",\n".join("    " + json.dumps(v) for v in value)
            parts.append(f"  {json.dumps(key)}: [\n{body}\n  ]")
        else:
            parts.append(f"  {json.dumps(key)}: {json.dumps(value)}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def _flat(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, tuple)):
        return " ".join(_flat(y) for y in x) if any(isinstance(y, (list, tuple)) for y in x) else ",".join(map(str, x))
    return str(x)


# ----------------------------------------------------------------------------
# subcommands


def cmd_crystal(cfg):
    lam = _dominant(cfg.lam)
    tab = {u: t for t, u in T.isomorphism(lam).items()}
    rows = []
    for t in sorted(S.crystal(lam), key=lambda u: u.s):
        rows.append({
            "string": list(t.s),
            "weight": list(S.weight(t)),
            "tableau": tab[t].render().split("\n"),
            "eps": [S.eps1(t), S.eps2(t)],
            "phi": [S.phi1(t), S.phi2(t)],
        })
    if cfg.format == "text":
        rows_txt = [dict(r, tableau=" / ".join(r["tableau"])) for r in rows]
        return render(lam, ["string", "weight", "tableau", "eps", "phi"], rows_txt, "text"), EXIT_OK
    return render(lam, ["string", "weight", "tableau", "eps", "phi"], rows, cfg.format), EXIT_OK


def cmd_decompose(cfg):
    lam = _dominant(cfg.lam)
    rows, census = [], {}
    for t, loc in sorted(D.decompose(lam).items(), key=lambda kv: kv[0].s):
        mu = S.weight(t)
        rows.append({
            "string": list(t.s),
            "weight": list(mu),
            "pat": loc.pat,
            "at": loc.at,
            "zeta": list(loc.zeta),
            "charge": C.charge(t) if mu.is_dominant() else None,
        })
        key = (loc.pat, loc.at, tuple(loc.zeta))
        census[key] = census.get(key, 0) + 1
    atoms = [{"pat": p, "at": a, "zeta": list(z), "size": n} for (p, a, z), n in sorted(census.items())]
    cols = ["string", "weight", "pat", "at", "zeta", "charge"]
    if cfg.format == "json":
        return render(lam, cols, rows, "json", {"census": atoms}), EXIT_OK
    out = render(lam, cols, rows, cfg.format)
    if cfg.format == "text":
        out += "\n" + render(lam, ["pat", "at", "zeta", "size"], atoms, "text")
    return out, EXIT_OK


def cmd_kostka(cfg):
    lam = _dominant(cfg.lam)
    if cfg.mu is not None:
        if not cfg.mu.is_dominant() or cfg.mu not in weights_below(lam):
            raise UsageError(f"mu {tuple(cfg.mu)} is not a dominant weight below lambda")
        mus = [cfg.mu]
    else:
        mus = [Weight(*mu) for mu in dominant_below(lam)]
    rows, code = [], EXIT_OK
    for mu in sorted(mus, reverse=True):
        got = C.kostka_from_charge(lam, mu)
        want = kostka_foulkes(tuple(lam), tuple(mu))
        ok = got == want
        if not ok:
            code = EXIT_FAIL
        if cfg.format == "json":
            rows.append({"mu": list(mu), "charge": _poly(got), "oracle": _poly(want), "match": ok})
        else:
            rows.append({"mu": list(mu), "charge": got.format("q"), "oracle": want.format("q"), "match": ok})
    return render(lam, ["mu", "charge", "oracle", "match"], rows, cfg.format), code


def cmd_graph(cfg):
    lam = _dominant(cfg.lam)
    if cfg.format in ("dot", "text"):
        return G.to_dot(lam, cfg.m), EXIT_OK
    rows = []
    for e in G.edges(lam):
        flipped = cfg.m is not None and G.in_twist(e.kind, e.level, cfg.m)
        src, dst = (e.upper, e.lower) if flipped else (e.lower, e.upper)
        cls = None if e.index is None else ("S" if G.is_swappable(e, lam) else "N")
        rows.append({"source": list(src), "target": list(dst), "label": str(e.label), "index": e.index, "class": cls})
    return render(lam, ["source", "target", "label", "index", "class"], rows, cfg.format), EXIT_OK


def cmd_verify(cfg):
    bound = 6 if cfg.bound is None else cfg.bound
    results = V.run_all(bound, jobs=cfg.jobs)
    lines = []
    code = EXIT_OK
    for r in results:
        lines.append(V.format_result(r, "corrected"))
        for c in r.checks:
            if c.role != "literal":
                lines.append(V.format_check(c))
        if not r.passed("corrected"):
            code = EXIT_FAIL
    notes = [V.format_check(c) for r in results for c in r.checks if c.role == "literal" and not c.passed]
    if notes:
        lines.append("")
        lines.append("literal forms that do not hold (the corrected forms are checked above):")
        lines.extend(notes)
    lines.append("")
    lines.append("all checks pass" if code == EXIT_OK else "verification FAILED")
    return "\n".join(lines) + "\n", code


COMMANDS = {
    "crystal": cmd_crystal,
    "decompose": cmd_decompose,
    "kostka": cmd_kostka,
    "graph": cmd_graph,
    "verify": cmd_verify,
}


def build_parser():
    p = Parser(prog="c2charge", description="Crystals, atoms and charge for Sp(4).")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--lambda", dest="lam", type=parse_weight, metavar="L1,L2")
    p.add_argument("--mu", type=parse_weight, metavar="M1,M2")
    p.add_argument("--m", type=int, metavar="INDEX", help="wall index for the twisted graph")
    p.add_argument("--bound", type=int, metavar="N")
    p.add_argument("--format", choices=["json", "csv", "dot", "text"])
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    return p


def main(argv=None):
    parser = build_parser()
    cfg = parser.parse_args(argv)
    if cfg.format is None:
        cfg.format = "dot" if cfg.command == "graph" else "text"
    try:
        if cfg.bound is not None and cfg.bound < 0:
            raise UsageError("--bound must be >= 0")
        if cfg.m is not None and cfg.m < 0:
            raise UsageError("--m must be >= 0")
        if cfg.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        if cfg.format == "dot" and cfg.command != "graph":
            raise UsageError("--format dot is only available for graph")
        text, code = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"c2charge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
