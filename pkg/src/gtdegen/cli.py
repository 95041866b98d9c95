"""Command-line front end.

Weightings A are given in row-major pair order (1,2),(1,3),...,(1,n),(2,3),...
Exit codes: 0 all checks pass, 1 a check failed, 2 malformed input, 3 size guard hit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import config
from .exactla import format_rational

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class InputError(ValueError):
    pass


def int_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def resolve_n(args, *, need_lambda: bool = False, need_a: bool = False) -> int:
    from .lie import check_dominant, pairs
    n = args.n
    lam = getattr(args, "lam", None)
    if lam is not None:
        try:
            check_dominant(lam)
        except ValueError as exc:
            raise InputError(str(exc))
        if n is not None and len(lam) != n - 1:
            raise InputError(f"--lambda has {len(lam)} entries, expected {n - 1}")
        n = len(lam) + 1
    elif need_lambda:
        raise InputError("--lambda is required")
    a = getattr(args, "A", None)
    if a is not None:
        if n is None:
            m = 2
            while len(pairs(m)) < len(a):
                m += 1
            n = m
        if len(a) != len(pairs(n)):
            raise InputError(f"--A needs {len(pairs(n))} entries for n={n}")
    elif need_a:
        raise InputError("--A is required")
    if n is None:
        raise InputError("--n or --lambda is required")
    if n < 2:
        raise InputError("n must be at least 2")
    return n


# --- subcommands ---------------------------------------------------------------------

def cmd_polytope(args) -> tuple:
    from .polytope import (display, lattice_points_GT, lattice_points_P, lattice_set_to_json,
                           pi_lambda, psi)
    n = resolve_n(args, need_lambda=True)
    lam = args.lam
    if args.kind == "pi":
        pts = pi_lambda(lam)
    elif args.kind == "p":
        pts = lattice_points_P(lam)
    elif args.kind == "gt":
        pts = lattice_points_GT(lam)
    else:
        pts = frozenset(psi(lam, t) for t in pi_lambda(lam))
    data = lattice_set_to_json(n, pts)
    data["kind"] = args.kind
    data["count"] = len(pts)
    text = [f"{len(pts)} points"] + [display(t) for t in sorted(pts)]
    return True, data, text


def cmd_basis(args) -> tuple:
    from .lie import weyl_dim
    from .rep import module
    resolve_n(args, need_lambda=True)
    m = module(args.lam, args.max_dim)
    ok = m.check_basis()
    data = {"lambda": list(args.lam), "weyl_dim": weyl_dim(args.lam),
            "points": len(m.points), "rank": m.basis_rank(), "basis": ok}
    return ok, data, [f"dim {data['weyl_dim']}, |Pi| {data['points']}, rank {data['rank']}: "
                      + ("basis" if ok else "NOT a basis")]


def cmd_filtration(args) -> tuple:
    from .cone import in_cone, sigma
    from .rep import module
    n = resolve_n(args, need_lambda=True, need_a=True)
    if not in_cone(args.A):
        raise InputError("A is not in the cone K")
    m = module(args.lam, args.max_dim)
    s = sigma(n, args.A)
    ok = m.lfiltration_holds(args.A, s) and m.lfiltration_exact(args.A, s)
    dims = m.graded_dims(s)
    data = {"lambda": list(args.lam), "A": list(args.A), "holds": ok,
            "graded_dims": {str(k): v for k, v in dims.items()}}
    text = [f"filtration {'holds' if ok else 'FAILS'}"]
    text += [f"  m={k}: {v}" for k, v in dims.items()]
    return ok, data, text


def cmd_ideal(args) -> tuple:
    from .ideals import (exp_component, ideal_component, initial_exp_component,
                         initial_ideal_component, jrelation_component, polynomial_to_str,
                         r_lambda_size, toric_component)
    from .lie import weyl_dim
    n = resolve_n(args, need_lambda=True)
    lam = args.lam
    if args.kind in ("initial", "initial-exp"):
        if args.A is None:
            raise InputError("--A is required for initial components")
        resolve_n(args, need_lambda=True, need_a=True)
        fn = initial_ideal_component if args.kind == "initial" else initial_exp_component
        comp = fn(lam, args.A, args.max_dim)
    else:
        fn = {"plain": ideal_component, "exp": exp_component, "toric": toric_component,
              "j": jrelation_component}[args.kind]
        comp = fn(lam) if args.kind == "j" else fn(lam, args.max_dim)
    ok = comp.monomial_count - comp.dim == weyl_dim(lam) or args.kind == "j"
    data = comp.to_json()
    data.update({"kind": args.kind, "n": n, "dim": comp.dim,
                 "monomials": r_lambda_size(lam), "codim_matches_weyl_dim": ok})
    text = [f"{args.kind} component, dim {comp.dim} of {comp.monomial_count}"]
    text += [polynomial_to_str(b) for b in comp.basis]
    return ok, data, text


def cmd_cone(args) -> tuple:
    from .cone import cone_check, h_description_check, maxcone_certificate, sigma
    n = resolve_n(args, need_a=True)
    rep = cone_check(args.A)
    data = rep.to_json()
    text = [f"member: {rep.member}, interior: {rep.interior}"]
    ok = True
    if rep.member:
        hd = h_description_check(n, sigma(n, args.A))
        data["h_description"] = hd
        ok = hd
        if not rep.interior:
            certs = maxcone_certificate(args.A)
            data["certificates"] = [c.to_json() for c in certs]
            for c in certs:
                good = c.not_in_initial_ideal and c.in_toric_ideal
                ok = ok and good
                text.append(f"facet {c.facet}: certificate {'verified' if good else 'FAILED'}")
    return ok, data, text


def random_c(n: int, seed: int) -> dict:
    from .verify import random_c as draw
    return draw(n, random.Random(seed))


def cmd_orbit(args) -> tuple:
    from .cone import in_cone
    from .ideals import evaluate_polynomial, initial_ideal_component
    from .phi import exp_orbit_point, exp_tensor_holds, orbit_to_json, plucker_point
    n = resolve_n(args, need_lambda=True, need_a=True)
    if not in_cone(args.A):
        raise InputError("A is not in the cone K")
    c = random_c(n, args.seed)
    coords = exp_orbit_point(args.lam, args.A, c, args.max_dim)
    pl = plucker_point(n, args.A, c)
    basis = initial_ideal_component(args.lam, args.A, args.max_dim).basis
    vanish = all(evaluate_polynomial(b, pl) == 0 for b in basis)
    tensor = exp_tensor_holds(args.lam, args.A, c)
    data = orbit_to_json(n, coords)
    data.update({"c": [[i, j, format_rational(x)] for (i, j), x in sorted(c.items())],
                 "vanishes": vanish, "exp_tensor": tensor})
    text = [f"{len(coords)} nonzero coordinates; relations vanish: {vanish}; "
            f"tensor identity: {tensor}"]
    return vanish and tensor, data, text


def cmd_cartan(args) -> tuple:
    from .cone import in_cone
    from .lie import add_weights, weyl_dim
    from .phi import cartan_component_dim
    resolve_n(args, need_lambda=True, need_a=True)
    if args.mu is None or len(args.mu) != len(args.lam):
        raise InputError("--mu must have the same length as --lambda")
    if not in_cone(args.A):
        raise InputError("A is not in the cone K")
    d = cartan_component_dim(args.lam, args.mu, args.A, args.max_dim)
    target = weyl_dim(add_weights(args.lam, args.mu))
    data = {"lambda": list(args.lam), "mu": list(args.mu), "A": list(args.A),
            "dim": d, "weyl_dim": target}
    return d == target, data, [f"component dim {d}, expected {target}"]


def cmd_essential(args) -> tuple:
    from .freeorder import essential_signatures, prec_cartan_check, prec_toric_kernel
    from .ideals import toric_component
    from .polytope import display, lattice_set_to_json, pi_lambda
    n = resolve_n(args, need_lambda=True)
    ess = essential_signatures(args.lam, max_dim=args.max_dim)
    same = ess == pi_lambda(args.lam)
    cart = prec_cartan_check(args.lam, args.lam)
    tor = prec_toric_kernel(args.lam) == toric_component(args.lam)
    data = lattice_set_to_json(n, ess)
    data.update({"equals_pi": same, "cartan": cart, "toric_kernel": tor})
    text = [f"{len(ess)} essential signatures; equal to Pi: {same}; "
            f"cartan: {cart}; toric kernel: {tor}"]
    if args.format == "text" and n == 3:
        text.append(" ".join(display(t) for t in sorted(ess)))
    return same and cart and tor, data, text


def cmd_dual(args) -> tuple:
    from .cone import eta, eta_star, in_cone, pi_tilde, sigma_tilde, upsilon
    from .ideals import (general_initial_component, ideal_component, initial_ideal_component,
                         transport)
    from .lie import dual_weight
    from .polytope import pi_lambda
    n = resolve_n(args, need_lambda=True, need_a=True)
    if not in_cone(args.A):
        raise InputError("A is not in the cone K")
    lt = dual_weight(args.lam)
    pts = pi_tilde(args.lam) == frozenset(eta(t) for t in pi_lambda(lt))
    lhs = general_initial_component(ideal_component(args.lam, args.max_dim),
                                    sigma_tilde(n, args.A))
    rhs = transport(initial_ideal_component(lt, eta_star(args.A), args.max_dim),
                    lambda i: upsilon(n, i), args.lam)
    data = {"lambda": list(args.lam), "A": list(args.A), "pi_tilde": pts,
            "transport": lhs == rhs}
    return pts and lhs == rhs, data, [f"pi_tilde: {pts}; transport: {lhs == rhs}"]


def cmd_verify_all(args) -> tuple:
    from .verify import CRITERIA
    which = sorted(CRITERIA) if not args.only else list(args.only)
    bad = [k for k in which if k not in CRITERIA]
    if bad:
        raise InputError(f"unknown criteria {bad}")
    data, text, ok = {}, [], True
    for k in which:
        passed, details = CRITERIA[k]()
        ok = ok and passed
        data[str(k)] = {"passed": passed, "seconds": details.get("seconds")}
        text.append(f"criterion {k}: {'PASS' if passed else 'FAIL'} ({details.get('seconds')} s)")
    return ok, data, text


COMMANDS = {
    "polytope": cmd_polytope, "basis": cmd_basis, "filtration": cmd_filtration,
    "ideal": cmd_ideal, "cone": cmd_cone, "orbit": cmd_orbit, "cartan": cmd_cartan,
    "essential": cmd_essential, "dual": cmd_dual, "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--lambda", dest="lam", type=int_list,
                        help="dominant weight a_1,...,a_{n-1}")
    common.add_argument("--A", type=int_list,
                        help="weighting in row-major pair order (1,2),(1,3),...,(2,3),...")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-dim", dest="max_dim", type=int)
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="gtdegen", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("polytope", parents=[common], help="Pi, P, GT lattice points or psi(Pi)")
    p.add_argument("--kind", choices=("pi", "p", "gt", "psi"), default="pi")
    sub.add_parser("basis", parents=[common], help="check that M_T u is a basis of L_lambda")
    sub.add_parser("filtration", parents=[common], help="check the filtration induced by A")
    p = sub.add_parser("ideal", parents=[common], help="a component of a Pluecker-type ideal")
    p.add_argument("--kind", choices=("plain", "initial", "exp", "initial-exp", "toric", "j"),
                   default="plain")
    p.add_argument("--initial", dest="kind", action="store_const", const="initial")
    p.add_argument("--toric", dest="kind", action="store_const", const="toric")
    sub.add_parser("cone", parents=[common], help="cone membership and facet certificates")
    sub.add_parser("orbit", parents=[common], help="exponential orbit point and vanishing check")
    p = sub.add_parser("cartan", parents=[common], help="degenerate Cartan component")
    p.add_argument("--mu", type=int_list, required=True)
    sub.add_parser("essential", parents=[common], help="essential signatures")
    sub.add_parser("dual", parents=[common], help="dual construction transport checks")
    p = sub.add_parser("verify-all", parents=[common], help="run every acceptance check")
    p.add_argument("--only", type=int_list, help="comma-separated criterion numbers")
    return parser


def emit(args, data, text) -> None:
    if args.format == "json":
        out = json.dumps(data, indent=2, sort_keys=True) + "\n"
    else:
        out = "\n".join(text) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


LIST_FLAGS = ("--A", "--lambda", "--mu")


def join_negative_values(argv: list) -> list:
    """Rewrite '--A -1,2' as '--A=-1,2' so argparse does not read -1 as a flag."""
    out, k = [], 0
    while k < len(argv):
        tok = argv[k]
        nxt = argv[k + 1] if k + 1 < len(argv) else None
        if tok in LIST_FLAGS and nxt is not None and nxt.startswith("-") and nxt[1:2].isdigit():
            out.append(f"{tok}={nxt}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def run(argv: list | None = None) -> int:
    parser = build_parser()
    argv = join_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        if args.max_dim is not None and args.max_dim < 1:
            raise InputError("--max-dim must be positive")
        config.set_max_dim(args.max_dim)
        ok, data, text = COMMANDS[args.command](args)
    except config.GuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        config.set_max_dim(None)
    emit(args, data, text)
    return EXIT_OK if ok else EXIT_FAILED


def main() -> None:
    sys.exit(run())
