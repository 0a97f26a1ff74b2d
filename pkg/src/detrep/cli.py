"""Command-line interface.

Exit codes: 0 success, 1 negative result (e.g. not equivalent), 2 malformed
input, 3 internal invariant violation.
"""
import argparse
import sys
from dataclasses import dataclass

from .algebra.field import QQ, Field, format_scalar
from .algebra.multipoly import format_multipoly
from .algebra.unipoly import format_unipoly
from .curves import rank_profile, reconstruct_bundle_pair, restrict_to_param_curve
from .errors import (BadDimensions, DetrepError, FormatError, InvariantViolation, NotContained,
                     NotEquivalent, RankUnexpected)
from .forms import (LinFormMatrix, determinant_hypersurface, entry_independence_check,
                    genericity_probe, tangent_cone_leading_form)
from .frobenius import EquivalenceCertificate, frobenius_decompose, verify_certificate
from .generators import gen_frobenius_instance, gen_random_pair, plant_curve_instance
from . import selftest, textio

EXIT_OK, EXIT_NEGATIVE, EXIT_MALFORMED, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    trials: int = 3
    field: Field = QQ
    out: str = None

    def check_characteristic(self, r):
        if self.field.p is not None and self.field.p <= r + 1:
            raise BadDimensions(f"prime {self.field.p} must exceed r+1 = {r + 1}")


class _Out:
    def __init__(self, path):
        self.path = path
        self.chunks = []

    def write(self, text):
        self.chunks.append(text)

    def close(self):
        text = "".join(self.chunks)
        if self.path:
            with open(self.path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _convert(value, field):
    # re-express rational data in a prime field
    if field.p is None:
        return value
    if isinstance(value, LinFormMatrix):
        return LinFormMatrix([[[field(c) for c in e] for e in row] for row in value.entries])
    return value


def _load(path, cfg):
    inst = textio.load(path)
    if cfg.field.p is not None:
        if inst.field.p is not None and inst.field != cfg.field:
            raise FormatError(f"file is over {inst.field.tag}, requested {cfg.field.tag}")
        inst.sections = [textio.Section(s.kind, s.name, _convert(s.value, cfg.field)) for s in inst.sections]
        inst.field = cfg.field
    return inst


def cmd_det(args, cfg, out):
    inst = _load(args.file, cfg)
    m = inst.get("linmat", args.name)
    cfg.check_characteristic(m.r)
    det = determinant_hypersurface(m)
    if cfg.out:
        out.write(textio.dumps(textio.InstanceFile(m.r, m.ambient, inst.field).add("poly", "det", det)))
    else:
        out.write(format_multipoly(det) + "\n")
    return EXIT_OK


def _parse_point(text, field):
    try:
        return [field(tok) for tok in text.replace(",", " ").split()]
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad point {text!r}") from None


def cmd_tangent_cone(args, cfg, out):
    inst = _load(args.file, cfg)
    f = inst.get("poly")
    if args.point:
        p = _parse_point(args.point, inst.field)
    elif inst.has("points"):
        p = list(inst.get("points").points[0])
    else:
        p = [inst.field(0)] * f.nvars
    if len(p) != f.nvars:
        raise FormatError(f"point has {len(p)} coordinates, polynomial has {f.nvars} variables")
    lf = tangent_cone_leading_form(f, p)
    out.write(f"multiplicity {lf.multiplicity}\nleading-form {format_multipoly(lf.form)}\n")
    return EXIT_OK if lf.multiplicity >= 1 else EXIT_NEGATIVE


def cmd_check_generic(args, cfg, out):
    inst = _load(args.file, cfg)
    m = inst.get("linmat", args.name)
    indep = entry_independence_check(m)
    probe = genericity_probe(m, cfg.trials, cfg.seed)
    out.write(f"entry-independent {'yes' if indep else 'no'}\n")
    out.write(f"genericity-probe {'pass' if probe else 'fail'}\n")
    return EXIT_OK if indep and probe else EXIT_NEGATIVE


def _cert_file(cert, r, g, field):
    inst = textio.InstanceFile(r, g, field)
    inst.add("smat", "S", cert.S).add("smat", "T", cert.T)
    inst.add("flag", "transposed", cert.transposed).add("scalar", "c", cert.c)
    return inst


def _witness_text(exc):
    w = exc.witness
    if isinstance(w, dict):
        parts = []
        for k, v in w.items():
            if isinstance(v, tuple) and v and isinstance(v[0], tuple):
                v = "[" + "; ".join(" ".join(format_scalar(x) for x in row) for row in v) + "]"
            elif isinstance(v, (list, tuple)):
                v = "(" + ", ".join(format_scalar(x) if not isinstance(x, (list, tuple, dict)) else str(x)
                                    for x in v) + ")"
            elif not isinstance(v, (str, dict, int)):
                v = format_scalar(v)
            parts.append(f"{k}={v}")
        return " ".join(parts)
    return str(w)


def cmd_frobenius(args, cfg, out):
    a = _load(args.a, cfg).get("linmat", "A")
    inst_b = _load(args.b, cfg)
    b = inst_b.get("linmat", "B")
    cfg.check_characteristic(b.r)
    try:
        cert = frobenius_decompose(a, b, seed=cfg.seed)
    except NotEquivalent as exc:
        sys.stderr.write(f"not equivalent: {exc}\nwitness {exc.reason}: {_witness_text(exc)}\n")
        out.write(f"not-equivalent {exc.reason}\n")
        return EXIT_NEGATIVE
    out.write(textio.dumps(_cert_file(cert, b.r, b.ambient, inst_b.field)))
    return EXIT_OK


def cmd_verify(args, cfg, out):
    a = _load(args.a, cfg).get("linmat", "A")
    b = _load(args.b, cfg).get("linmat", "B")
    ci = _load(args.cert, cfg)
    cert = EquivalenceCertificate(ci.get("smat", "S"), ci.get("smat", "T"),
                                  ci.get("flag", "transposed"), ci.get("scalar", "c"))
    ok = verify_certificate(a, b, cert)
    out.write("verified\n" if ok else "rejected\n")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _restricted(inst, name):
    if inst.has("upmat") and not inst.has("curve"):
        return inst.get("upmat")
    return restrict_to_param_curve(inst.get("linmat", name), inst.get("curve"))


def cmd_restrict(args, cfg, out):
    inst = _load(args.file, cfg)
    m = _restricted(inst, args.name)
    res = textio.InstanceFile(inst.r, inst.g, inst.field).add("upmat", "restricted", m)
    out.write(textio.dumps(res))
    return EXIT_OK


def cmd_rank_profile(args, cfg, out):
    inst = _load(args.file, cfg)
    prof = rank_profile(_restricted(inst, args.name))
    out.write(f"generic-rank {prof.generic_rank}\n")
    for factor, rank in prof.drop_locus:
        out.write(f"drop {format_unipoly(factor)} rank {rank}\n")
    return EXIT_OK


def _basis_lines(label, sb):
    lines = [f"{label} rank {sb.rank} degree-invariant {sb.degree_invariant}"]
    for row in sb.basis:
        lines.append("  [" + ", ".join(format_unipoly(e) for e in row) + "]")
    return lines


def cmd_reconstruct(args, cfg, out):
    inst = _load(args.file, cfg)
    alpha = inst.get("linmat", args.name)
    reference = None
    if args.reference:
        reference = _load(args.reference, cfg).get("linmat", "B")
    try:
        rep = reconstruct_bundle_pair(alpha, inst.get("curve"), reference, seed=cfg.seed)
    except (NotContained, RankUnexpected, NotEquivalent) as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_NEGATIVE
    lines = [f"generic-rank {rep.rank_profile.generic_rank}"]
    lines += [f"drop {format_unipoly(f)} rank {k}" for f, k in rep.rank_profile.drop_locus]
    lines += _basis_lines("candidate-plain", rep.candidate_plain)
    lines += _basis_lines("candidate-transpose", rep.candidate_transpose)
    lines += _basis_lines("kernel-line", rep.kernel_line)
    lines.append(f"disambiguation {rep.disambiguation.value}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_gen(args, cfg, out):
    if args.kind == "frobenius":
        cfg.check_characteristic(args.r)
        a, b, s0, t0 = gen_frobenius_instance(args.r, args.g, args.transposed, cfg.seed, cfg.field)
        inst = textio.InstanceFile(args.r, args.g, cfg.field)
        inst.add("linmat", "A", a).add("linmat", "B", b).add("smat", "S0", s0).add("smat", "T0", t0)
        inst.add("flag", "transposed", args.transposed)
    elif args.kind == "pair":
        cfg.check_characteristic(args.r)
        a, b = gen_random_pair(args.r, args.g, cfg.seed, cfg.field)
        inst = textio.InstanceFile(args.r, args.g, cfg.field).add("linmat", "A", a).add("linmat", "B", b)
    else:
        if cfg.field.p is not None:
            raise BadDimensions("curve instances are generated over the rationals only")
        ci = plant_curve_instance(args.r, args.g, args.degree, cfg.seed)
        inst = textio.InstanceFile(args.r, args.g).add("linmat", "Lambda", ci.lam).add("curve", "C", ci.curve)
    out.write(textio.dumps(inst))
    return EXIT_OK


def cmd_selftest(args, cfg, out):
    ok = selftest.run(trials=cfg.trials, seed=cfg.seed, out=lambda line: out.write(line + "\n"))
    return EXIT_OK if ok else EXIT_INTERNAL


def _field_arg(text):
    try:
        return Field.from_tag(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=3)
    common.add_argument("--field", type=_field_arg, default=QQ, help="q (rationals) or p:<prime>")
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="detrep", description="Determinantal representations, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", parents=[common], help="determinant of a linear-form matrix")
    p.add_argument("file")
    p.add_argument("--name", default=None)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("tangent-cone", parents=[common], help="leading form of a polynomial at a point")
    p.add_argument("file")
    p.add_argument("--point", default=None, help="comma- or space-separated coordinates")
    p.set_defaults(func=cmd_tangent_cone)

    p = sub.add_parser("check-generic", parents=[common], help="entry independence and minor probe")
    p.add_argument("file")
    p.add_argument("--name", default=None)
    p.set_defaults(func=cmd_check_generic)

    p = sub.add_parser("frobenius", parents=[common], help="equivalence certificate for A against B")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("verify", parents=[common], help="check a certificate")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify)

    for name, func, helptext in (("restrict", cmd_restrict, "restrict a matrix to a curve"),
                                 ("rank-profile", cmd_rank_profile, "rank along a curve")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file")
        p.add_argument("--name", default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("reconstruct", parents=[common], help="candidate bundles along a curve")
    p.add_argument("file")
    p.add_argument("--name", default=None)
    p.add_argument("--reference", default=None, help="file holding the reference representation")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("gen", parents=[common], help="generate a seeded instance")
    p.add_argument("kind", choices=["frobenius", "pair", "curve"])
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--transposed", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selftest", parents=[common], help="run the seeded property suite")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    if args.command == "gen":
        if args.g is None:
            args.g = (args.r + 1) ** 2
        if args.degree is None:
            args.degree = args.g - 1
    cfg = RunConfig(args.seed, args.trials, args.field, args.out)
    out = _Out(args.out)
    try:
        code = args.func(args, cfg, out)
    except InvariantViolation as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except NotEquivalent as exc:
        sys.stderr.write(f"not equivalent: {exc}\n")
        return EXIT_NEGATIVE
    except (DetrepError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MALFORMED
    out.close()
    return code


if __name__ == "__main__":
    sys.exit(main())
