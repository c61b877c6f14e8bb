"""
Command dispatcher: one subcommand per library operation, each producing a
CommandResult whose JSON form is canonical and whose text form is a
projection of it.

Exit codes: 0 ok, 1 mathematical negative (non-member, not F-pure, failed
certificate), 2 error, 3 unresolved within the given bounds.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, NoReturn, Optional, Sequence

from algebra.errors import AlgebraError, PreconditionError, SessionError
from algebra.groebner import Ideal, ideal_member, normal_form
from algebra.ideal_ops import eliminate, ideal_colon, ideal_intersect, saturate
from algebra.polyring import PolyRing, Polynomial
from cli.session import Session, load_session
from fsing.frobenius import frobenius_power, frobenius_root, omega
from fsing.invariants import (
    HSLChainSpec,
    TestIdealBoundSpec,
    fedder_fpure,
    frobenius_adjoint,
    frobenius_colon,
    gens_as_text,
    hsl_chain,
    select_u_candidates,
    test_ideal_lower_bound,
    uniform_hsl_bound,
)
from fsing.tightclosure import (
    QuotientRingCtx,
    TightClosureQuery,
    in_R_circ,
    is_nilpotent,
    r0_certificate,
    tc_certificate,
    test_element_certificate,
)
from utils.config import DEFAULT_K_MAX, DEFAULT_LEVEL, DEFAULT_MAX_E
from utils.logger import LEVELS, get_logger, set_level

logger = get_logger(__name__)

EXIT_CODES = {"ok": 0, "negative": 1, "error": 2, "unresolved": 3}
# flags whose natural dest is a Python keyword
DEST_OVERRIDES = {"--with": "other"}


class UsageError(AlgebraError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


@dataclass
class CommandResult:
    command: str
    status: str = "ok"
    payload: Dict[str, Any] = field(default_factory=dict)
    negative: bool = False

    @property
    def exit_code(self) -> int:
        if self.status == "ok" and self.negative:
            return EXIT_CODES["negative"]
        return EXIT_CODES[self.status]

    def to_dict(self) -> Dict[str, Any]:
        return {"command": self.command, "status": self.status, "payload": self.payload}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.status}"]
        for key, value in self.payload.items():
            lines.extend(_text_lines(key, value, indent=""))
        return "\n".join(lines)


def _scalar(value: Any) -> str:
    if value is None:
        return "unresolved"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _text_lines(key: str, value: Any, indent: str) -> List[str]:
    if isinstance(value, dict):
        out = [f"{indent}{key}:"]
        for k, v in value.items():
            out.extend(_text_lines(k, v, indent + "  "))
        return out
    if isinstance(value, list):
        out = [f"{indent}{key}:"]
        for i, item in enumerate(value):
            if isinstance(item, (dict, list)):
                out.extend(_text_lines(f"[{i}]", item, indent + "  "))
            else:
                out.append(f"{indent}  {_scalar(item)}")
        return out
    return [f"{indent}{key}: {_scalar(value)}"]


# --- argument resolution ---

class _Context:
    def __init__(self, session: Session, args: argparse.Namespace) -> None:
        self.session = session
        self.args = args
        self.ring = self._pick_ring()

    def _pick_ring(self) -> Optional[PolyRing]:
        if self.args.ring:
            return self.session.ring(self.args.ring)
        named = getattr(self.args, "ideal", None)
        if named and named.strip() in self.session.ideals:
            return self.session.ideals[named.strip()].ring
        return self.session.default_ring

    def _require_ring(self) -> PolyRing:
        if self.ring is None:
            raise SessionError("no ring available: pass --ring or declare one in --session")
        return self.ring

    def ideal(self, ref: str) -> Ideal:
        return self.session.ideal(ref, self._require_ring())

    def poly(self, ref: str) -> Polynomial:
        return self.session.poly(ref, self._require_ring())

    def ideal_list(self, refs: str) -> List[Ideal]:
        return [self.ideal(r) for r in refs.split(";")]

    def quotient(self, with_primes: bool) -> QuotientRingCtx:
        a = self.ideal(self.args.ideal)
        primes = None
        if self.args.min_primes:
            primes = self.ideal_list(self.args.min_primes)
        elif self.args.ideal.strip() in self.session.min_primes:
            primes = self.session.min_primes[self.args.ideal.strip()]
        if with_primes and primes is None:
            logger.warning("no minimal primes supplied for %s", self.args.ideal)
        return QuotientRingCtx(a.ring, a, primes)


def _ideal_payload(I: Ideal) -> Dict[str, Any]:
    return {"generators": gens_as_text(I)}


# --- handlers ---

def _gb(ctx: _Context) -> CommandResult:
    return CommandResult("gb", payload=_ideal_payload(ctx.ideal(ctx.args.ideal)))


def _nf(ctx: _Context) -> CommandResult:
    f = normal_form(ctx.poly(ctx.args.poly), ctx.ideal(ctx.args.ideal))
    return CommandResult("nf", payload={"normal_form": str(f)})


def _member(ctx: _Context) -> CommandResult:
    ok = ideal_member(ctx.poly(ctx.args.poly), ctx.ideal(ctx.args.ideal))
    return CommandResult("member", payload={"member": ok}, negative=not ok)


def _colon(ctx: _Context) -> CommandResult:
    return CommandResult("colon", payload=_ideal_payload(ideal_colon(ctx.ideal(ctx.args.ideal), ctx.ideal(ctx.args.by))))


def _intersect(ctx: _Context) -> CommandResult:
    I, J = ctx.ideal(ctx.args.ideal), ctx.ideal(ctx.args.other)
    return CommandResult("intersect", payload=_ideal_payload(ideal_intersect(I, J)))


def _saturate(ctx: _Context) -> CommandResult:
    return CommandResult("saturate", payload=_ideal_payload(saturate(ctx.ideal(ctx.args.ideal), ctx.poly(ctx.args.poly))))


def _eliminate(ctx: _Context) -> CommandResult:
    result = eliminate(ctx.ideal(ctx.args.ideal), ctx.args.k)
    return CommandResult("eliminate", payload={"ring": str(result.ring), **_ideal_payload(result)})


def _fpow(ctx: _Context) -> CommandResult:
    return CommandResult("fpow", payload=_ideal_payload(frobenius_power(ctx.ideal(ctx.args.ideal), ctx.args.e)))


def _froot(ctx: _Context) -> CommandResult:
    return CommandResult("froot", payload=_ideal_payload(frobenius_root(ctx.ideal(ctx.args.ideal), ctx.args.e)))


def _omega(ctx: _Context) -> CommandResult:
    p = ctx.args.p if ctx.args.p is not None else ctx._require_ring().p
    return CommandResult("omega", payload={"p": p, "n": ctx.args.n, "omega": omega(ctx.args.n, p)})


def _adjoint(ctx: _Context) -> CommandResult:
    return CommandResult("adjoint", payload=_ideal_payload(frobenius_adjoint(ctx.ideal(ctx.args.ideal))))


def _fedder(ctx: _Context) -> CommandResult:
    fpure = fedder_fpure(ctx.ideal(ctx.args.ideal), ctx.ideal(ctx.args.max_ideal))
    return CommandResult("fedder", payload={"fpure": fpure}, negative=not fpure)


def _select_u(ctx: _Context) -> CommandResult:
    a = ctx.ideal(ctx.args.ideal)
    found = select_u_candidates(a, ctx.ideal(ctx.args.prime), a.ring.p)
    return CommandResult("select-u", payload=found.to_dict(), negative=not found.fpure)


def _hsl(ctx: _Context) -> CommandResult:
    report = hsl_chain(HSLChainSpec(ctx.ideal(ctx.args.ideal), ctx.poly(ctx.args.u), ctx.args.max_e))
    return CommandResult("hsl", status="ok" if report.stable else "unresolved", payload=report.to_dict())


def _hsl_bound(ctx: _Context) -> CommandResult:
    bound = uniform_hsl_bound(ctx.ideal(ctx.args.ideal), ctx.poly(ctx.args.u), ctx.args.max_e)
    return CommandResult("hsl-bound", status="ok" if bound is not None else "unresolved", payload={"hsl": bound})


def _test_ideal_bound(ctx: _Context) -> CommandResult:
    spec = TestIdealBoundSpec(
        ctx.ideal(ctx.args.ideal), ctx.poly(ctx.args.u), ctx.poly(ctx.args.d), ctx.args.h, ctx.args.max_e
    )
    bound = test_ideal_lower_bound(spec)
    status = "ok" if bound.stable else "unresolved"
    return CommandResult("test-ideal-bound", status=status, payload=bound.to_dict(), negative=not bound.positive)


def _tc_cert(ctx: _Context) -> CommandResult:
    Q = ctx.quotient(with_primes=False)
    query = TightClosureQuery(ctx.poly(ctx.args.r), ctx.ideal(ctx.args.b), ctx.poly(ctx.args.c), ctx.args.level)
    report = tc_certificate(query, Q)
    return CommandResult("tc-cert", payload=report.to_dict(), negative=not report.all_pass)


def _test_element(ctx: _Context) -> CommandResult:
    Q = ctx.quotient(with_primes=True)
    family = ctx.ideal_list(ctx.args.family)
    closure_lists = ctx.args.closure.split(";") if ctx.args.closure else []
    closures = [[ctx.poly(r) for r in chunk.split(",") if r.strip()] for chunk in closure_lists]
    if len(closures) != len(family):
        raise PreconditionError(f"{len(family)} ideals but {len(closures)} closure lists")
    report = test_element_certificate(ctx.poly(ctx.args.c), family, closures, ctx.args.level, Q)
    return CommandResult("test-element", payload=report.to_dict(), negative=not report.all_pass)


def _in_r_circ(ctx: _Context) -> CommandResult:
    ok = in_R_circ(ctx.poly(ctx.args.c), ctx.quotient(with_primes=True))
    return CommandResult("in-r-circ", payload={"in_R_circ": ok}, negative=not ok)


def _nilpotent(ctx: _Context) -> CommandResult:
    verdict = is_nilpotent(ctx.poly(ctx.args.r), ctx.quotient(with_primes=False), ctx.args.k_max)
    return CommandResult("nilpotent", status="ok" if verdict else "unresolved", payload={"nilpotent": verdict})


def _r0_cert(ctx: _Context) -> CommandResult:
    separators = [ctx.poly(s) for s in ctx.args.separators.split(";")]
    ok = r0_certificate(ctx.quotient(with_primes=True), separators)
    return CommandResult("r0-cert", payload={"r0": ok}, negative=not ok)


def _frob_colon(ctx: _Context) -> CommandResult:
    result = frobenius_colon(ctx.ideal(ctx.args.ideal), ctx.poly(ctx.args.u), ctx.args.n)
    return CommandResult("frob-colon", payload=_ideal_payload(result))


Handler = Callable[[_Context], CommandResult]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit the canonical JSON result")
    common.add_argument("--session", help="Session file declaring rings, ideals and polynomials")
    common.add_argument("--ring", help="Ring name from the session, or a literal like 'F 2 [X, Y]'")
    common.add_argument("--max-e", type=int, default=DEFAULT_MAX_E, help="Frobenius level bound for chains")
    common.add_argument("--level", type=int, default=DEFAULT_LEVEL, help="Level bound N for certificates")
    common.add_argument("--k-max", type=int, default=DEFAULT_K_MAX, help="Level bound for nilpotency checks")
    common.add_argument("--min-primes", help="';'-separated minimal primes of --ideal")
    common.add_argument("--log-level", choices=LEVELS, help="Diagnostics verbosity on stderr")

    parser = _Parser(prog="frobenius-lab", description="Exact characteristic-p commutative algebra")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Handler, help_text: str, *args: tuple) -> None:
        p = sub.add_parser(name, parents=[common], help=help_text)
        for flag, kind in args:
            dest = DEST_OVERRIDES.get(flag, flag.lstrip("-").replace("-", "_"))
            p.add_argument(flag, type=kind, required=True, dest=dest)
        p.set_defaults(handler=handler)

    add("gb", _gb, "Reduced Groebner basis", ("--ideal", str))
    add("nf", _nf, "Normal form of a polynomial", ("--poly", str), ("--ideal", str))
    add("member", _member, "Ideal membership", ("--poly", str), ("--ideal", str))
    add("colon", _colon, "Ideal quotient (I : J)", ("--ideal", str), ("--by", str))
    add("intersect", _intersect, "Ideal intersection", ("--ideal", str), ("--with", str))
    add("saturate", _saturate, "Saturation (I : f^inf)", ("--ideal", str), ("--poly", str))
    add("eliminate", _eliminate, "Eliminate the first k variables", ("--ideal", str), ("--k", int))
    add("fpow", _fpow, "Frobenius power I^[p^e]", ("--ideal", str), ("--e", int))
    add("froot", _froot, "Frobenius root I^[1/p^e]", ("--ideal", str), ("--e", int))
    add("omega", _omega, "omega_n = 1 + p + ... + p^(n-1)", ("--n", int))
    add("adjoint", _adjoint, "Frobenius adjoint (a^[p] : a)", ("--ideal", str))
    add("fedder", _fedder, "Fedder F-purity test", ("--ideal", str), ("--max-ideal", str))
    add("select-u", _select_u, "Generators of (a^[p] : a) outside q^[p]", ("--ideal", str), ("--prime", str))
    add("hsl", _hsl, "HSL chain and stabilization index", ("--ideal", str), ("--u", str))
    add("hsl-bound", _hsl_bound, "Uniform HSL bound", ("--ideal", str), ("--u", str))
    add(
        "test-ideal-bound", _test_ideal_bound, "Lower bound for the big test ideal",
        ("--ideal", str), ("--u", str), ("--d", str), ("--h", int),
    )
    add("tc-cert", _tc_cert, "Level-bounded tight-closure certificate",
        ("--ideal", str), ("--r", str), ("--b", str), ("--c", str))
    add("test-element", _test_element, "Test-element certificate over an ideal family",
        ("--ideal", str), ("--c", str), ("--family", str), ("--closure", str))
    add("in-r-circ", _in_r_circ, "Membership in the complement of the minimal primes", ("--ideal", str), ("--c", str))
    add("nilpotent", _nilpotent, "Bounded nilpotency check in S/a", ("--ideal", str), ("--r", str))
    add("r0-cert", _r0_cert, "(R_0) certificate from separators", ("--ideal", str), ("--separators", str))
    add("frob-colon", _frob_colon, "(prime^[p^n] : u^omega_n)", ("--ideal", str), ("--u", str), ("--n", int))

    omega_parser = sub.choices["omega"]
    omega_parser.add_argument("--p", type=int, default=None, help="Characteristic (defaults to the ring's)")
    return parser


def _command_name(argv: Sequence[str]) -> str:
    return next((a for a in argv if not a.startswith("-")), "frobenius-lab")


def run_command(session: Optional[Session], argv: Sequence[str]) -> CommandResult:
    """Parse argv and run one subcommand. Errors come back as status 'error', never raised."""
    try:
        args = build_parser().parse_args(list(argv))
        if args.log_level:
            set_level(args.log_level)
        if session is None:
            session = load_session(args.session) if args.session else Session()
        ctx = _Context(session, args)
        result = args.handler(ctx)
    except (AlgebraError, AssertionError) as exc:
        logger.error("%s failed: %s", _command_name(argv), exc)
        return CommandResult(_command_name(argv), status="error", payload={"message": str(exc)})
    logger.info("%s finished with status %s", result.command, result.status)
    return result


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv:
        build_parser().print_help(sys.stderr)
        return EXIT_CODES["error"]
    result = run_command(None, argv)
    print(result.to_json() if "--json" in argv else result.to_text())
    return result.exit_code
