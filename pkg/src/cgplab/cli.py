"""Command line front end.

Scalar commands print one JSON result document on stdout; ``susceptibility``
prints CSV.  Exit status: 0 success, 2 invalid input, 1 internal error,
64 usage error.
"""
import argparse
import os
import sys
import traceback

from . import cgp as cgp_mod
from . import grassmann, qubit
from .channel import KrausChannel
from .coherence import coherence, coherence_commutator
from .diffgeo import DEFAULT_H, HamiltonianPath, samples_to_csv, sweep
from .errors import ValidationError
from .jsonio import dumps, load_json, matrix_from_doc, matrix_to_doc
from .linalg import Tolerance
from .mori import computational_mori, mori_from_frame, rotate_mori

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


class _Context:
    def __init__(self, args):
        self.args = args
        try:
            self.tol = Tolerance(args.tol_structural, args.tol_equality)
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
        self.inputs = {}

    def load(self, key, path):
        doc, digest = load_json(path)
        self.inputs[key] = digest
        return doc

    def matrix(self, key, path):
        return matrix_from_doc(self.load(key, path))

    def basis(self, key, path, dim):
        if path is None:
            return computational_mori(dim)
        return mori_from_frame(self.matrix(key, path), self.tol)

    def channel(self, path):
        doc = self.load("channel", path)
        if not isinstance(doc, dict) or "kraus" not in doc:
            raise ValidationError("channel document needs a 'kraus' list")
        return KrausChannel(tuple(matrix_from_doc(k) for k in doc["kraus"]))

    def operator(self):
        # a unitary or a Kraus channel, whichever flag was given
        a = self.args
        if (a.unitary is None) == (a.channel is None):
            raise UsageError("give exactly one of --unitary or --channel\n")
        if a.unitary is not None:
            u = self.matrix("unitary", a.unitary)
            return u, u.shape[0]
        t = self.channel(a.channel)
        return t, t.dim

    def result(self, value, **extra):
        doc = {
            "command": self.args.command,
            "inputs": self.inputs,
            "value": value,
            "tolerances": {"structural": self.tol.structural, "equality": self.tol.equality},
        }
        doc.update(extra)
        return doc


def _default_seed():
    env = os.environ.get("CGPLAB_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"CGPLAB_SEED={env!r} is not an integer\n") from None


def cmd_cgp(ctx):
    op, d = ctx.operator()
    b = ctx.basis("basis", ctx.args.basis, d)
    if isinstance(op, KrausChannel):
        return ctx.result(cgp_mod.cgp_unital(op, b, ctx.tol))
    return ctx.result(cgp_mod.cgp_unitary(op, b, ctx.tol))


def cmd_estimate_cgp(ctx):
    a = ctx.args
    op, d = ctx.operator()
    b = ctx.basis("basis", a.basis, d)
    seed = a.seed if a.seed is not None else _default_seed()
    est = cgp_mod.estimate_cgp(op, b, a.samples, seed=seed, workers=a.workers, tol=ctx.tol)
    return ctx.result(est.mean, stderr=est.stderr, seed=est.seed, samples=est.samples, workers=a.workers)


def cmd_coherence(ctx):
    rho = ctx.matrix("state", ctx.args.state)
    b = ctx.basis("basis", ctx.args.basis, rho.shape[0])
    fn = coherence_commutator if ctx.args.method == "commutator" else coherence
    return ctx.result(fn(rho, b, ctx.tol))


def _pair(ctx):
    a = ctx.args
    if a.unitary is not None:
        u = ctx.matrix("unitary", a.unitary)
        return u, ctx.basis("basis", a.basis, u.shape[0])
    if a.basis_a is None or a.basis_b is None:
        raise UsageError("give --basis-a and --basis-b, or --unitary [--basis]\n")
    ba = mori_from_frame(ctx.matrix("basis_a", a.basis_a), ctx.tol)
    bb = mori_from_frame(ctx.matrix("basis_b", a.basis_b), ctx.tol)
    return ba, bb


def cmd_distance(ctx):
    fn = {
        "closed": grassmann.masa_distance,
        "superop": grassmann.masa_distance_superop,
        "commutator": grassmann.masa_distance_commutator,
    }[ctx.args.method]
    x, y = _pair(ctx)
    if not hasattr(x, "frame"):
        x, y = y, rotate_mori(x, y, ctx.tol)
    return ctx.result(fn(x, y), method=ctx.args.method)


def cmd_overlap(ctx):
    x, y = _pair(ctx)
    o = grassmann.x_matrix(x, y, ctx.tol) if not hasattr(x, "frame") else grassmann.overlap_matrix(x, y)
    return ctx.result(matrix_to_doc(o))


def cmd_dfs(ctx):
    x, y = _pair(ctx)
    if not hasattr(x, "frame"):
        return ctx.result(grassmann.cgp_tilde(x, y, ctx.tol))
    return ctx.result(grassmann.dfs_distance(x, y))


def cmd_phi(ctx):
    u = ctx.matrix("unitary", ctx.args.unitary)
    b = ctx.basis("basis", ctx.args.basis, u.shape[0])
    return ctx.result(grassmann.phi_measure(u, b, ctx.tol))


def cmd_qubit(ctx):
    a = ctx.args
    if a.verb == "distance":
        return ctx.result(qubit.qubit_distance(a.n, a.m))
    if a.verb == "cgp":
        return ctx.result(qubit.qubit_cgp(a.theta))
    return ctx.result(qubit.qubit_dfs(a.psi))


def cmd_haar(ctx):
    seed = ctx.args.seed if ctx.args.seed is not None else _default_seed()
    return ctx.result(matrix_to_doc(cgp_mod.haar_unitary(ctx.args.dim, seed)), seed=seed)


def cmd_fourier(ctx):
    return ctx.result(matrix_to_doc(cgp_mod.fourier_unitary(ctx.args.dim)))


def path_from_doc(doc):
    try:
        dim = int(doc["dim"])
        nodes = tuple((float(n["t"]), matrix_from_doc(n["H"])) for n in doc["nodes"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed path document: {exc}") from None
    return HamiltonianPath(dim=dim, nodes=nodes, gap_tol=float(doc.get("gap_tol", 1e-8)))


def cmd_susceptibility(ctx):
    a = ctx.args
    doc = ctx.load("path", a.path)
    path = path_from_doc(doc)
    h = a.h if a.h is not None else float(doc.get("h", DEFAULT_H))
    step = a.step if a.step is not None else float(doc.get("step", 0.1))
    return samples_to_csv(sweep(path, h=h, step=step, workers=a.workers), path.dim)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-structural", type=float, default=1e-10)
    common.add_argument("--tol-equality", type=float, default=1e-12)
    p = _Parser(prog="cgplab", description="Coherence generating power and MASA geometry.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    def op_flags(sp):
        sp.add_argument("--unitary")
        sp.add_argument("--channel")
        sp.add_argument("--basis")

    sp = sub.add_parser("cgp", help="closed-form CGP of a unitary or Kraus channel")
    op_flags(sp)
    sp.set_defaults(func=cmd_cgp)

    sp = sub.add_parser("estimate-cgp", help="Monte Carlo CGP estimate")
    op_flags(sp)
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_estimate_cgp)

    sp = sub.add_parser("coherence", help="B-coherence of a state")
    sp.add_argument("--state", required=True)
    sp.add_argument("--basis")
    sp.add_argument("--method", choices=("definition", "commutator"), default="definition")
    sp.set_defaults(func=cmd_coherence)

    for name, func, helptext in (
        ("distance", cmd_distance, "Grassmannian distance between two MASAs"),
        ("overlap", cmd_overlap, "overlap matrix of two MORIs"),
        ("dfs", cmd_dfs, "Fubini-Study distance between two MASAs"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--basis-a")
        sp.add_argument("--basis-b")
        sp.add_argument("--unitary")
        sp.add_argument("--basis")
        if name == "distance":
            sp.add_argument("--method", choices=("closed", "superop", "commutator"), default="closed")
        sp.set_defaults(func=func)

    sp = sub.add_parser("phi", help="log-determinant CGP measure")
    sp.add_argument("--unitary", required=True)
    sp.add_argument("--basis")
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("susceptibility", help="metric sweep along a Hamiltonian path (CSV)")
    sp.add_argument("--path", required=True)
    sp.add_argument("--h", type=float)
    sp.add_argument("--step", type=float)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_susceptibility)

    sp = sub.add_parser("qubit", help="qubit closed forms")
    verbs = sp.add_subparsers(dest="verb", parser_class=_Parser)
    _add_verb = verbs.add_parser
    verbs.add_parser = lambda name, **kw: _add_verb(name, parents=[common], **kw)
    v = verbs.add_parser("distance")
    v.add_argument("--n", type=float, nargs=3, required=True)
    v.add_argument("--m", type=float, nargs=3, required=True)
    v = verbs.add_parser("cgp")
    v.add_argument("--theta", type=float, required=True)
    v = verbs.add_parser("dfs")
    v.add_argument("--psi", type=float, required=True)
    sp.set_defaults(func=cmd_qubit)

    sp = sub.add_parser("haar", help="Haar-random unitary")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--seed", type=int)
    sp.set_defaults(func=cmd_haar)

    sp = sub.add_parser("fourier", help="discrete Fourier unitary")
    sp.add_argument("--dim", type=int, required=True)
    sp.set_defaults(func=cmd_fourier)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    command = None
    try:
        args = parser.parse_args(argv)
        command = args.command
        if command is None:
            raise UsageError(parser.format_usage())
        if command == "qubit" and args.verb is None:
            raise UsageError("qubit needs a verb: distance | cgp | dfs\n")
        ctx = _Context(args)
        out = args.func(ctx)
    except UsageError as exc:
        stderr.write(str(exc))
        return EXIT_USAGE
    except ValidationError as exc:
        stdout.write(dumps({"command": command, "error": {"type": type(exc).__name__, "message": str(exc)}}) + "\n")
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        traceback.print_exc(file=stderr)
        stdout.write(dumps({"command": command, "error": {"type": "InternalError", "message": str(exc)}}) + "\n")
        return EXIT_INTERNAL
    if isinstance(out, str):
        stdout.write(out)
    else:
        stdout.write(dumps(out) + "\n")
    return EXIT_OK


def main():
    sys.exit(run())
