"""Batch front-end.

Subcommands ``active-sum``, ``certify``, ``property-sweep`` and ``enumerate``
print line-oriented ``key=value`` reports. Exit codes: 0 success,
1 validation or hypothesis failure, 2 budget or cutoff exceeded, 3 parse error.
"""

import argparse
from dataclasses import dataclass, field
import os
from pathlib import Path
import sys

from .active_sum import realize_active_sum
from .catalog import fixture_path, named_group, sweep_catalog
from .cellularity import (
    SWEEP_NS,
    SchurData,
    certify_theorem2,
    corollary1_check,
    corollary2_check,
    describe_witness,
    is_cn_generated,
    lemma1_sweep,
    verify_certificate,
)
from .errors import (
    ActiveSumError,
    BudgetExceeded,
    CutoffExceeded,
    FamilyError,
    HypothesisViolation,
    MissingSchurData,
    ParseError,
)
from .families import CoxeterMatrix, conjugation_closure, coxeter_matrix, coxeter_reflection_family, cyclic_family
from .fp import DEFAULT_BUDGET, Presentation, abelianization, todd_coxeter
from .groups import Subgroup
from .perm import Perm
from .textio import parse_family_text, parse_group_text, parse_perm_list

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_PARSE = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    group: str = None
    group_file: str = None
    coxeter: str = None
    family: str = None
    family_file: str = None
    seeds: list = field(default_factory=list)
    n: int = None
    encoding: str = "auto"
    budget: int = DEFAULT_BUDGET
    strategy: str = "hlt"
    schur: str = None
    out: str = None
    orders: tuple = (1, 16)
    ns: tuple = SWEEP_NS
    groups: list = None
    presentation: str = None
    subgroup: list = field(default_factory=list)

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be >= 1")
        if self.n is not None and self.n < 1:
            raise ValueError("n must be >= 1")


def default_budget():
    value = os.environ.get("ACTIVESUM_BUDGET")
    if value is None:
        return DEFAULT_BUDGET
    try:
        budget = int(value)
    except ValueError:
        raise ParseError(f"ACTIVESUM_BUDGET={value!r} is not an integer") from None
    if budget < 1:
        raise ParseError("ACTIVESUM_BUDGET must be positive")
    return budget


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_coxeter(spec):
    path = Path(spec)
    if path.exists():
        return CoxeterMatrix.parse(_read(path), str(path), name=path.stem.upper())
    bundled = fixture_path(path.name)
    if path.suffix == ".cox" and bundled.is_file():
        return CoxeterMatrix.parse(bundled.read_text(), path.name, name=path.stem.upper())
    try:
        return coxeter_matrix(spec)
    except (KeyError, ValueError):
        raise ParseError(f"no Coxeter matrix file or type named {spec!r}") from None


def _embed(H, degree):
    out = []
    for g in H.generators:
        if g.degree > degree:
            raise ParseError(f"{H.name} does not act on {degree} points")
        out.append(Perm(g.images + tuple(range(g.degree, degree))))
    return out


def load_inputs(cfg):
    """Resolve the ambient group and family named by a RunConfig."""
    G, fam = None, None
    if cfg.coxeter:
        M = _load_coxeter(cfg.coxeter)
        G, fam = coxeter_reflection_family(M, cfg.budget)
        G.name = f"coxeter:{M.name}"
    elif cfg.family_file:
        G, fam = parse_family_text(_read(cfg.family_file), cfg.family_file)
    elif cfg.group_file:
        G = parse_group_text(_read(cfg.group_file), cfg.group_file)
    elif cfg.group:
        try:
            G = named_group(cfg.group)
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc)) from None
    else:
        raise ParseError("one of --group, --group-file, --coxeter or --family-file is required")

    seeds = []
    if cfg.family:
        spec = cfg.family.strip()
        if spec.startswith("cyclic:"):
            try:
                m = int(spec.split(":", 1)[1])
            except ValueError:
                raise ParseError(f"bad family spec {spec!r}") from None
            fam = cyclic_family(G, m)
        else:
            try:
                H = named_group(spec)
                gens = _embed(H, G.degree)
            except KeyError:
                gens = parse_perm_list(spec, G.degree)
            seeds.append(gens)
    for s in cfg.seeds:
        seeds.append(parse_perm_list(s, G.degree))
    if seeds:
        subgroups = []
        for gens in seeds:
            for g in gens:
                if not G.contains(g):
                    raise FamilyError(f"seed generator {g} is not in the ambient group")
            subgroups.append(Subgroup(G, gens))
        fam = conjugation_closure(G, subgroups)
    if fam is None:
        raise ParseError("no family given: use --family, --seed, --family-file or --coxeter")
    return G, fam


def _encoding(cfg, fam):
    if cfg.encoding != "auto":
        return cfg.encoding
    return "cyclic" if all(F.cyclic_generator() is not None for F in fam.members) else "regular"


def _family_lines(G, fam):
    orders = sorted(F.order() for F in fam.members)
    return [
        f"group={G.name or 'custom'}",
        f"group_order={G.order()}",
        f"group_degree={G.degree}",
        f"family_members={len(fam)}",
        f"family_member_orders={','.join(map(str, orders))}",
    ]


def cmd_active_sum(cfg, out):
    G, fam = load_inputs(cfg)
    lines = _family_lines(G, fam)
    encoding = _encoding(cfg, fam)
    try:
        result = realize_active_sum(G, fam, encoding, cfg.budget, cfg.strategy)
    except BudgetExceeded as exc:
        lines.append("status=budget-exceeded")
        lines += [f"{k}={v}" for k, v in exc.stats.items()]
        out.write("\n".join(lines) + "\n")
        return EXIT_BUDGET
    lines += result.report_lines()
    if not result.generating:
        lines.append("flag=not-generating")
    if cfg.n is not None:
        lines.append(f"n={cfg.n}")
    lines.append("status=ok")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_certify(cfg, out):
    if cfg.n is None:
        raise ParseError("certify requires --n")
    G, fam = load_inputs(cfg)
    lines = _family_lines(G, fam) + [f"n={cfg.n}"]
    try:
        cert = certify_theorem2(G, fam, cfg.n, cfg.budget)
    except HypothesisViolation as exc:
        lines += [
            "status=hypothesis-violation",
            f"hypothesis={exc.hypothesis}",
            f"witness={describe_witness(exc.witness)}",
            f"detail={exc}",
        ]
        out.write("\n".join(lines) + "\n")
        return EXIT_INVALID
    except BudgetExceeded as exc:
        lines.append("status=budget-exceeded")
        lines += [f"{k}={v}" for k, v in exc.stats.items()]
        out.write("\n".join(lines) + "\n")
        return EXIT_BUDGET
    result = cert.inputs["result"]
    verdict = verify_certificate(cert)
    lines += [
        f"certificate=C_{cfg.n}-cellular",
        f"subject={cert.subject}",
        f"order_S={result.order_S}",
        f"kernel_phi={result.kernel_order}",
        f"iso={str(result.is_iso).lower()}",
        f"ambient_cellular={str(result.is_iso).lower()}",
        f"subject_cn_generated={str(is_cn_generated(cert.group, cfg.n)).lower()}",
        f"verified={str(verdict.accepted).lower()}",
    ]
    status = EXIT_OK if verdict.accepted else EXIT_INVALID
    if cfg.schur:
        schur = SchurData.bundled() if cfg.schur == "bundled" else SchurData.load(cfg.schur)
        try:
            c1 = corollary1_check(cert, schur)
            lines += c1.lines()
            if not c1.passed:
                status = EXIT_INVALID
        except MissingSchurData as exc:
            lines.append(f"cor1_missing={exc}")
        if result.generating:
            try:
                c2 = corollary2_check(G, fam, cfg.n, schur, cfg.budget, cert=cert)
                lines += c2.lines()
                if not c2.passed:
                    status = EXIT_INVALID
            except MissingSchurData as exc:
                lines.append(f"cor2_missing={exc}")
    if cfg.out:
        Path(cfg.out).write_text(cert.serialize())
        lines.append(f"certificate_file={cfg.out}")
    lines.append("status=ok" if status == EXIT_OK else "status=failed")
    out.write("\n".join(lines) + "\n")
    return status


def cmd_property_sweep(cfg, out):
    lo, hi = cfg.orders
    if cfg.groups:
        names = list(cfg.groups)
    else:
        names = sweep_catalog(hi)
    groups = {}
    for name in names:
        try:
            G = named_group(name)
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc)) from None
        if lo <= G.order() <= hi:
            groups[name] = G
    report = lemma1_sweep(groups, cfg.ns)
    lines = [f"orders={lo}..{hi}", f"n={','.join(map(str, cfg.ns))}"] + report.lines()
    lines.append("status=ok" if report.violations == 0 else "status=failed")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK if report.violations == 0 else EXIT_INVALID


def cmd_enumerate(cfg, out):
    if not cfg.presentation:
        raise ParseError("enumerate requires --presentation")
    P = Presentation.parse(_read(cfg.presentation), cfg.presentation)
    words = [P.parse_word(w) for w in cfg.subgroup]
    lines = [f"generators={P.ngens}", f"relators={len(P.relators)}"]
    try:
        table = todd_coxeter(P, words, cfg.budget, cfg.strategy)
    except BudgetExceeded as exc:
        lines.append("status=budget-exceeded")
        lines += [f"{k}={v}" for k, v in exc.stats.items()]
        out.write("\n".join(lines) + "\n")
        return EXIT_BUDGET
    lines.append(table.format_stats())
    lines.append(f"abelianization={abelianization(P)}")
    lines.append("status=ok")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


COMMANDS = {
    "active-sum": cmd_active_sum,
    "certify": cmd_certify,
    "property-sweep": cmd_property_sweep,
    "enumerate": cmd_enumerate,
}


def _order_range(text):
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def _int_list(text):
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(prog="activesum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def inputs(p):
        p.add_argument("--group", help="named group, e.g. sym3, alt4, sl:3:2")
        p.add_argument("--group-file", help="group file (degree line + generators)")
        p.add_argument("--coxeter", help="Coxeter matrix file or type (A3, B3, H3, I2(5))")
        p.add_argument("--family", help="cyclic:m, a named subgroup, or comma-separated permutations")
        p.add_argument("--family-file", help="family file")
        p.add_argument("--seed", action="append", default=[], dest="seeds", help="seed subgroup generators")
        p.add_argument("--n", type=int)
        p.add_argument("--encoding", choices=["auto", "cyclic", "regular"], default="auto")
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--strategy", choices=["hlt", "felsch"], default="hlt")

    p = sub.add_parser("active-sum", help="realize the active sum of a family")
    inputs(p)
    p = sub.add_parser("certify", help="emit a C_n-cellularity certificate")
    inputs(p)
    p.add_argument("--schur", help="Schur multiplier fixture file, or 'bundled'")
    p.add_argument("--out", help="write the certificate here")
    p = sub.add_parser("property-sweep", help="exhaustive divisor-lemma sweep")
    p.add_argument("--orders", type=_order_range, default=(1, 16))
    p.add_argument("--n", type=_int_list, default=SWEEP_NS, dest="ns")
    p.add_argument("--groups", type=lambda s: [t.strip() for t in s.split(";") if t.strip()])
    p = sub.add_parser("enumerate", help="coset enumeration of a presentation file")
    p.add_argument("--presentation", required=True)
    p.add_argument("--subgroup", action="append", default=[], help="subgroup generator word")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--strategy", choices=["hlt", "felsch"], default="hlt")
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    options = vars(args)
    command = options.pop("command")
    try:
        if options.get("budget") is None and command != "property-sweep":
            options["budget"] = default_budget()
        cfg = RunConfig(command=command, **options)
        return COMMANDS[command](cfg, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetExceeded, CutoffExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ActiveSumError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
