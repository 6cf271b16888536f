"""Command line: ``alia check|construct|certify|examples``.

Exit codes: 0 every law holds, 1 some law fails (or a construction's
hypothesis does), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from importlib import resources
from typing import Callable

from . import certify as cert
from .constructions import (
    dual_representation, drinfeld_double, natural_form, semidirect_product,
    special_left_alia, special_left_alia_coalgebra,
)
from .core import AliaError, HypothesisError, LawId, LinearMap, Residual, left_right_operators, parallel_map
from .dual_triangular import (
    bracket_omega, check_prop53, co_ybe_residual, nijenhuis_coalgebra_from_cosymplectic,
    nijenhuis_from_symplectic,
)
from .fileformat import Bundle, FileError, emit_structure, load, parse_structure
from .laws import (
    check_adjoint_admissible, check_admissible, check_associative, check_bialgebra_compat,
    check_coadjoint_admissible, check_coassociative, check_cocommutative, check_commutative,
    check_cosymplectic, check_D_bialgebra, check_left_alia, check_left_alia_coalgebra,
    check_nijenhuis_algebra, check_nijenhuis_coalgebra, check_nijenhuis_D_compat,
    check_nijenhuis_left_alia_bialgebra, check_nijenhuis_representation, check_quadratic,
    check_representation, check_special_bialgebra_condition, check_symplectic,
)
from .report import ERROR, FAIL, PASS, Report, Run, Verdict
from .yang_baxter import (
    alia_ybe_residual, check_prop33, check_prop37, check_relative_rota_baxter,
    check_thm_bn_conditions, check_weak_rrb, delta_r, s_admissibility_residual, t_sharp_lift,
)

DATA_PACKAGE = "alia.data"


class UsageError(AliaError):
    code = "USAGE"


# ------------------------------------------------------------ inputs

def example_names() -> list[str]:
    return sorted(p.name[:-len(".alia")] for p in resources.files(DATA_PACKAGE).iterdir()
                  if p.name.endswith(".alia"))


def example_text(name: str) -> str:
    if name not in example_names():
        raise UsageError(f"no packaged example {name!r}", "UNKNOWN_EXAMPLE")
    return resources.files(DATA_PACKAGE).joinpath(name + ".alia").read_text(encoding="utf-8")


def read_source(path: str) -> str:
    """File contents; ``examples/NAME.alia`` falls back to the packaged copy."""
    if os.path.exists(path):
        try:
            with open(path, encoding="utf-8") as fh:
                return fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise FileError(f"cannot read {path}: {exc}", "IO_ERROR") from None
    head, name = os.path.split(path)
    if os.path.basename(head) == "examples" and name.endswith(".alia"):
        stem = name[:-len(".alia")]
        if stem in example_names():
            return example_text(stem)
    raise FileError(f"cannot read {path}: no such file", "IO_ERROR")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational: {text!r}") from None


def parse_assignments(items: list[str] | None) -> dict[str, str]:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"expected NAME=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def apply_overrides(b: Bundle, overrides: dict[str, str], bindings) -> Bundle:
    """Replace named maps, tensors or forms by ``identity``, ``zero`` or a sparse term list."""
    if not overrides:
        return b
    maps, tensors, forms = dict(b.maps), dict(b.tensors), dict(b.forms)
    degree = b.degree
    for name, spec in overrides.items():
        kind = "tensor" if name in tensors else "form" if name in forms else "map"
        n = b.dim
        if spec == "identity" and n:
            body = " + ".join(f"1*({i}<-{i})" if kind == "map" else f"1*({i},{i})"
                              for i in range(1, n + 1))
        elif spec in ("zero", "identity"):
            body = "0*(1<-1)" if kind == "map" else "0*(1,1)"
        else:
            body = spec
        param_lines = "".join(f"param {p}\n" for p in b.params)
        sub = parse_structure(f"dim {n}\n{param_lines}{kind} X = {body}\n", bindings)
        degree = max(degree, sub.degree)
        if kind == "map":
            maps[name] = sub.maps["X"]
        elif kind == "tensor":
            tensors[name] = sub.tensors["X"]
        else:
            forms[name] = sub.forms["X"]
    return b.replace(maps=maps, tensors=tensors, forms=forms, degree=degree)


class _Need:
    """Named access to bundle items with a uniform missing-data error."""

    def __init__(self, b: Bundle, rep: str):
        self.b, self.rep_name = b, rep

    def _get(self, store, kind, name):
        if name not in store:
            raise UsageError(f"law needs {kind} {name!r}, not present in the file", "MISSING_DATA")
        return store[name]

    def map(self, name):
        return self._get(self.b.maps, "map", name)

    def opt_map(self, name):
        return self.b.maps.get(name)

    def tensor(self, name):
        return self._get(self.b.tensors, "tensor", name)

    def form(self, name):
        return self._get(self.b.forms, "form", name)

    @property
    def A(self):
        return self.b.algebra

    @property
    def C(self):
        return self.b.coalgebra

    @property
    def R(self):
        adj = left_right_operators(self.b.algebra)
        return adj if self.rep_name == "adjoint" else dual_representation(adj)


def _matched_pair(x: _Need) -> Residual:
    N, S = x.opt_map("N"), x.opt_map("S")
    if (N is None) != (S is None):
        raise UsageError("matched-pair uses N and S together or neither", "MISSING_DATA")
    return drinfeld_double(x.A, x.C, N, S).pair.residual


LAWS: dict[str, Callable[[_Need], Residual]] = {
    "left-alia": lambda x: check_left_alia(x.A),
    "associative": lambda x: check_associative(x.A),
    "commutative": lambda x: check_commutative(x.A),
    "coassociative": lambda x: check_coassociative(x.C),
    "cocommutative": lambda x: check_cocommutative(x.C),
    "nijenhuis-algebra": lambda x: check_nijenhuis_algebra(x.A, x.map("N")),
    "left-alia-coalgebra": lambda x: check_left_alia_coalgebra(x.C),
    "nijenhuis-coalgebra": lambda x: check_nijenhuis_coalgebra(x.C, x.map("S")),
    "representation": lambda x: check_representation(x.A, x.R),
    "nijenhuis-representation":
        lambda x: check_nijenhuis_representation(x.A, x.map("N"), x.R, x.map("alpha")),
    "admissible": lambda x: check_admissible(x.A, x.map("N"), x.R, x.map("beta")),
    "adjoint-admissible": lambda x: check_adjoint_admissible(x.A, x.map("N"), x.map("S")),
    "coadjoint-admissible": lambda x: check_coadjoint_admissible(x.C, x.map("S"), x.map("N")),
    "bialgebra": lambda x: check_bialgebra_compat(x.A, x.C),
    "nijenhuis-bialgebra":
        lambda x: check_nijenhuis_left_alia_bialgebra(x.A, x.C, x.map("N"), x.map("S")),
    "quadratic": lambda x: check_quadratic(x.A, x.form("B")),
    "symplectic": lambda x: check_symplectic(x.A, x.form("omega")),
    "cosymplectic": lambda x: check_cosymplectic(x.C, x.tensor("r")),
    "d-bialgebra": lambda x: check_D_bialgebra(x.A, x.C),
    "nijenhuis-d-compat": lambda x: check_nijenhuis_D_compat(x.A, x.C, x.map("f"), x.map("F")),
    "special-bialgebra": lambda x: check_special_bialgebra_condition(
        x.A, x.C, x.map("f"), x.map("g"), x.map("F"), x.map("G")),
    "matched-pair": _matched_pair,
    "ybe": lambda x: alia_ybe_residual(x.A, x.tensor("r")),
    "ybe-coproduct": lambda x: check_prop33(x.A, x.tensor("r")),
    "s-admissible": lambda x: s_admissibility_residual(x.tensor("r"), x.map("N"), x.map("S")),
    "r-nijenhuis-coproduct": lambda x: check_prop37(x.A, x.map("N"), x.map("S"), x.tensor("r")),
    "rota-baxter": lambda x: check_relative_rota_baxter(x.A, x.R, x.map("T")),
    "weak-rota-baxter":
        lambda x: check_weak_rrb(x.A, x.map("N"), x.R, x.map("alpha"), x.map("T")),
    "semidirect-admissible": lambda x: check_thm_bn_conditions(
        x.A, x.map("N"), x.R, x.map("S"), x.map("alpha"), x.map("beta")),
    "co-ybe": lambda x: co_ybe_residual(x.C, x.form("omega")),
    "co-ybe-bracket": lambda x: check_prop53(x.C, x.form("omega")),
}
assert set(LAWS) == {law.value for law in LawId}

ALIASES = {"nijenhuis": "nijenhuis-algebra"}


def law_name(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in LAWS:
        raise UsageError(f"unknown law {name!r}", "UNKNOWN_LAW")
    return name


def evaluate_law(b: Bundle, law: str, rep: str = "adjoint") -> Residual:
    return LAWS[law_name(law)](_Need(b, rep))


def _verdict(b: Bundle, law: str, rep: str) -> Verdict:
    try:
        return Verdict.of(law, evaluate_law(b, law, rep))
    except HypothesisError as exc:
        entries = exc.residual.entries if exc.residual is not None else ()
        return Verdict(law, FAIL, tuple(sorted(entries)), f"{exc.code} {exc.law}")
    except AliaError as exc:
        return Verdict(law, ERROR, (), f"{exc.code} {exc}")


def _load(path: str, bindings, overrides) -> Bundle:
    b = parse_structure(read_source(path), bindings)
    return apply_overrides(b, overrides, bindings)


# ---------------------------------------------------------- commands

def cmd_check(files: list[str], laws: list[str], bindings=None, overrides=None,
              rep: str = "adjoint") -> Report:
    laws = [law_name(law) for law in laws]
    bindings = dict(bindings or {})

    def one(path):
        run = Run(path, tuple(sorted(bindings.items())))
        try:
            b = _load(path, bindings, overrides or {})
        except AliaError as exc:
            run.verdicts = [Verdict(law, ERROR, (), f"{exc.code} {exc}") for law in laws]
        else:
            run.verdicts = [_verdict(b, law, rep) for law in laws]
        return run

    return Report("check", parallel_map(one, files))


def cmd_certify(path: str, laws: list[str], fixed=None, overrides=None,
                rep: str = "adjoint") -> Report:
    """Sweep the free parameters over the sample grid; a parameter-free file is a plain check."""
    laws = [law_name(law) for law in laws]
    fixed = dict(fixed or {})
    overrides = overrides or {}
    text = read_source(path)
    at_zero = {p: fixed.get(p, 0) for p in _declared(text)}
    probe = apply_overrides(parse_structure(text, at_zero), overrides, at_zero)
    free = [p for p in probe.params if p not in fixed]
    if not free:
        report = cmd_check([path], laws, fixed, overrides, rep)
        report.command = "certify"
        return report
    report = Report("certify")

    def evaluate(law):
        def at(binding):
            b = apply_overrides(parse_structure(text, binding), overrides, binding)
            v = _verdict(b, law, rep)
            if v.status == ERROR:
                raise UsageError(v.message, "INPUT_ERROR")
            return Residual(LawId(law), v.entries)
        return at

    for law in laws:
        bound = cert.degree_bound(LawId(law), probe.degree)
        report.certifications.append(
            (path, cert.certify(evaluate(law), probe.params, law, bound, fixed)))
    return report


def _declared(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        words = line.split("#", 1)[0].split()
        if len(words) == 2 and words[0] == "param":
            out.append(words[1])
    return out


CONSTRUCTIONS = ("special", "semidirect", "double", "delta-r", "bracket-omega",
                 "nijenhuis-from-symplectic", "nijenhuis-from-cosymplectic", "t-sharp-lift")


def construct(kind: str, b: Bundle, rep: str = "adjoint") -> Bundle:
    x = _Need(b, rep)
    if kind == "special":
        A = special_left_alia(x.A, x.map("f"), x.map("g"))
        out = b.replace(algebra=A)
        if "F" in b.maps and "G" in b.maps:
            out = out.replace(coalgebra=special_left_alia_coalgebra(x.C, x.map("F"), x.map("G")))
        return out
    if kind == "semidirect":
        N, alpha = x.opt_map("N"), x.opt_map("alpha")
        if N is None or alpha is None:
            return Bundle(2 * b.dim, algebra=semidirect_product(x.A, x.R))
        big, nij = semidirect_product(x.A, x.R, N, alpha)
        return Bundle(big.dim, algebra=big, maps={"N": nij})
    if kind == "double":
        N, S = x.opt_map("N"), x.opt_map("S")
        if (N is None) != (S is None):
            raise UsageError("double uses N and S together or neither", "MISSING_DATA")
        dbl = drinfeld_double(x.A, x.C, N, S)
        if not dbl.pair.matched:
            raise HypothesisError("HYPOTHESIS_FAILED", "matched-pair", dbl.pair.residual)
        maps = {} if dbl.nij is None else {"N": dbl.nij}
        return Bundle(dbl.big.dim, algebra=dbl.big, maps=maps, forms={"B": dbl.form})
    if kind == "delta-r":
        return b.replace(coalgebra=delta_r(x.A, x.tensor("r")))
    if kind == "bracket-omega":
        return b.replace(algebra=bracket_omega(x.C, x.form("omega")))
    if kind == "nijenhuis-from-symplectic":
        N = nijenhuis_from_symplectic(x.A, x.form("omega"), x.tensor("r"))
        return b.replace(maps={**b.maps, "N": N})
    if kind == "nijenhuis-from-cosymplectic":
        S = nijenhuis_coalgebra_from_cosymplectic(x.C, x.tensor("r"), x.form("omega"))
        return b.replace(maps={**b.maps, "S": S})
    if kind == "t-sharp-lift":
        lift = t_sharp_lift(x.A, x.R, x.map("T"), x.opt_map("S"), x.opt_map("alpha"),
                            x.opt_map("beta"), x.opt_map("N"))
        maps = {k: v for k, v in (("N", lift.nij), ("S", lift.adm)) if v is not None}
        return Bundle(lift.algebra.dim, algebra=lift.algebra, maps=maps,
                      tensors={"r": lift.r})
    raise UsageError(f"unknown construction {kind!r}", "UNKNOWN_CONSTRUCTION")


def cmd_construct(kind: str, path: str, bindings=None, overrides=None,
                  rep: str = "adjoint") -> tuple[Report, str | None]:
    """Returns the report and, on success, the emitted structure text."""
    report = Report("construct")
    run = Run(path, tuple(sorted(dict(bindings or {}).items())))
    report.runs.append(run)
    try:
        b = _load(path, dict(bindings or {}), overrides or {})
        text = emit_structure(construct(kind, b, rep))
    except HypothesisError as exc:
        entries = exc.residual.entries if exc.residual is not None else ()
        run.verdicts.append(Verdict(exc.law, FAIL, tuple(sorted(entries)),
                                    f"{exc.code} (construction {kind})"))
        return report, None
    except AliaError as exc:
        run.verdicts.append(Verdict(kind, ERROR, (), f"{exc.code} {exc}"))
        return report, None
    run.verdicts.append(Verdict(kind, PASS))
    return report, text


# ---------------------------------------------------------------- argv

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alia", description="Exact checks for left Alia structures.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, laws=True):
        if laws:
            sp.add_argument("--law", action="append", required=True,
                            help="law to evaluate; repeatable")
        sp.add_argument("--set", action="append", metavar="NAME=RAT", help="bind a parameter")
        sp.add_argument("--override", action="append", metavar="NAME=SPEC",
                        help="replace a map, tensor or form: identity, zero or terms")
        sp.add_argument("--rep", choices=("adjoint", "dual-adjoint"), default="adjoint",
                        help="module used by representation-based laws")
        sp.add_argument("-o", "--output", metavar="PATH")

    c = sub.add_parser("check", help="evaluate laws on structure files")
    c.add_argument("files", nargs="+")
    common(c)
    c.add_argument("--format", choices=("text", "tsv", "json"), default="text")
    c.add_argument("--plot", metavar="DIR", help="also write PNG figures to DIR")

    k = sub.add_parser("construct", help="build a new structure file")
    k.add_argument("kind", choices=CONSTRUCTIONS)
    k.add_argument("file")
    common(k, laws=False)

    f = sub.add_parser("certify", help="certify laws for every parameter value")
    f.add_argument("file")
    common(f)
    f.add_argument("--format", choices=("text", "tsv", "json"), default="text")
    f.add_argument("--plot", metavar="DIR", help="also write PNG figures to DIR")

    e = sub.add_parser("examples", help="list, print or export the packaged examples")
    e.add_argument("name", nargs="?")
    e.add_argument("--export", metavar="DIR")
    return p


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _examples(args) -> int:
    if args.export:
        os.makedirs(args.export, exist_ok=True)
        for name in example_names():
            _write(example_text(name), os.path.join(args.export, name + ".alia"))
        sys.stdout.write("".join(f"{name}.alia\n" for name in example_names()))
        return 0
    if args.name:
        sys.stdout.write(example_text(args.name))
        return 0
    for name in example_names():
        first = example_text(name).splitlines()[0].lstrip("# ").strip()
        sys.stdout.write(f"{name}\t{first}\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "examples":
            return _examples(args)
        bindings = {k: parse_rational(v) for k, v in parse_assignments(args.set).items()}
        overrides = parse_assignments(args.override)
        if args.command == "construct":
            report, text = cmd_construct(args.kind, args.file, bindings, overrides, args.rep)
            if text is None:
                sys.stdout.write(report.to_text())
            else:
                _write(text, args.output)
                if args.output:
                    sys.stdout.write(f"wrote {args.output}\n")
            return report.exit_code
        if args.command == "check":
            report = cmd_check(args.files, args.law, bindings, overrides, args.rep)
        else:
            report = cmd_certify(args.file, args.law, bindings, overrides, args.rep)
        _write(report.render(args.format), args.output)
        if args.plot:
            from .plotting import plot_report
            plot_report(report, args.plot)
        return report.exit_code
    except AliaError as exc:
        sys.stderr.write(f"alia: {exc.code}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
