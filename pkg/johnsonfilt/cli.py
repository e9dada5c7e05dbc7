"""Command line interface: ``johnsonfilt <command> [options]``."""

import argparse
import logging
import sys

import numpy as np

import johnsonfilt
from johnsonfilt.core import automorphisms, johnson, lielyndon, magnus, ranks
from johnsonfilt.core.formatting import _display_table, to_json
from johnsonfilt.core.options import OPTIONS
from johnsonfilt.core.parsing import ParseError, parse_autword, parse_word
from johnsonfilt.core.reports import VerificationReport

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _int_list(text):
    try:
        return [int(value) for value in text.split(",") if value.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma separated integers, got {text!r}"
        ) from None


def _emit(args, text, data):
    if args.format == "json":
        print(to_json(data))
    else:
        print(text)


def _emit_report(args, report):
    text = report.summary()
    for note in report.notes:
        text += f"\nnote: {note}"
    if not report.ok:
        text += "\n" + _display_table(report.to_dataframe())

    _emit(args, text, report.to_dict())
    return EXIT_OK if report.ok else EXIT_FAILED


def _cmd_witt(args):
    value = lielyndon.witt_rank(args.q, args.s)
    _emit(args, str(value), {"q": args.q, "s": args.s, "rank": str(value)})
    return EXIT_OK


def _cmd_lyndon(args):
    words = lielyndon.lyndon_words(args.q, args.s)

    lines = [
        f"{' '.join(map(str, w))}  {lielyndon.format_bracket(lielyndon.bracketing(w))}"
        for w in words
    ]
    data = {"q": args.q, "s": args.s, "words": [list(w) for w in words]}
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def _cmd_magnus(args):
    word = parse_word(args.word, args.n)
    series = magnus.magnus_expand(word, args.trunc)
    degree = magnus.filtration_degree(word, args.trunc)

    text = f"{series}\nfiltration degree: {degree}"
    data = {
        "n": args.n,
        "trunc": args.trunc,
        "filtration_degree": str(degree),
        "terms": [{"monomial": list(m), "coeff": str(c)} for m, c in series],
    }
    _emit(args, text, data)
    return EXIT_OK


def _cmd_tau(args):
    aw = parse_autword(args.aut, args.n)
    f = automorphisms.autword_compile(aw)

    cap = OPTIONS["default_cap"] if args.cap is None else args.cap
    degree = johnson.johnson_degree(f, cap)
    value = johnson.tau(f, degree.value)

    text = f"johnson degree: {degree}\n{value}"
    data = {"johnson_degree": str(degree), "tau": value.to_json()}
    _emit(args, text, data)
    return EXIT_OK


def _cmd_verify_mccool(args):
    return _emit_report(args, automorphisms.verify_mccool(args.n))


def _cmd_verify_commuting(args):
    return _emit_report(args, automorphisms.verify_commuting(args.n, args.k))


def _cmd_verify_prop62(args):
    return _emit_report(args, johnson.verify_prop62(args.n, args.q, args.rs))


def _cmd_verify_conjugation(args):
    report = automorphisms.verify_conjugation_action(args.n, args.q, args.rs, args.signs)
    return _emit_report(args, report)


def _cmd_verify_projection(args):
    seed = OPTIONS["default_seed"] if args.seed is None else args.seed
    rng = np.random.default_rng(seed)

    failures = []
    for sample in range(args.samples):
        aw = automorphisms.random_autword(args.n, int(rng.integers(1, 7)), rng)
        report = automorphisms.verify_projection(args.n, aw)
        failures += [(check, f"{aw}: {case}", detail) for check, case, detail in report.failures]

    report = VerificationReport("projection", args.samples, "samples", failures=failures)
    return _emit_report(args, report)


def _cmd_verify_injectivity(args):
    matrix = johnson.injectivity_matrix(args.n, args.k, args.s)

    rows, cols = matrix.shape
    rank, expected = matrix.attrs["rank"], matrix.attrs["expected"]
    status = "OK" if rank == expected else "FAILED"

    text = f"{status}: rows: {rows}, cols: {cols}, rank: {rank}, expected: {expected}"
    data = {"rows": rows, "cols": cols, "rank": rank, "expected": expected}
    _emit(args, text, data)
    return EXIT_OK if rank == expected else EXIT_FAILED


def _cmd_verify_lie_morphism(args):
    report = johnson.verify_lie_morphism(args.n, args.samples, seed=args.seed)
    return _emit_report(args, report)


def _cmd_ranks_gr(args):
    value = ranks.gr_rank_psn(args.n, args.s)
    _emit(args, str(value), {"n": args.n, "s": args.s, "rank": str(value)})
    return EXIT_OK


def _cmd_ranks_summand(args):
    table = ranks.summand_ranks(args.n, args.k, args.s)
    _emit(args, _display_table(table.to_dataframe()), table.to_dict())
    return EXIT_OK


def _cmd_ranks_bound(args):
    detail = ranks.hi_lower_bound(args.n, args.s, args.i, detail=True)

    text = f"{detail['value']}"
    if detail["k"] is not None:
        text += f" (summand k={detail['k']})"

    data = {"n": args.n, "s": args.s, "i": args.i}
    data.update({key: str(value) for key, value in detail.items() if key != "k"})
    data["k"] = detail["k"]
    _emit(args, text, data)
    return EXIT_OK


def _cmd_ranks_growth(args):
    report = ranks.growth_check(args.n, args.i, range(args.smin, args.smax + 1))
    text = _display_table(report.to_dataframe()) + "\n" + report.summary()
    _emit(args, text, report.to_dict())
    return EXIT_OK if report.ok else EXIT_FAILED


def _cmd_ranks_pbw(args):
    coeffs = ranks.pbw_coefficients(args.q, args.smax)
    _emit(args, coeffs.to_text(), coeffs.to_dict())
    return EXIT_OK


def _cmd_ep(args):
    coeffs = ranks.ep_coeffs(args.n, args.smax, hat=args.hat)
    _emit(args, coeffs.to_text(), coeffs.to_dict())
    return EXIT_OK


def _common_parser():

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["text", "json"], default="text", help="output format"
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v: info, -vv: debug"
    )
    return common


def _add(subparsers, name, func, common, help, arguments):

    parser = subparsers.add_parser(name, parents=[common], help=help)
    for flag, kwargs in arguments:
        parser.add_argument(flag, **kwargs)
    parser.set_defaults(func=func)
    return parser


def _required_int(help):
    return {"type": int, "required": True, "help": help}


def build_parser():

    common = _common_parser()

    parser = argparse.ArgumentParser(
        prog="johnsonfilt",
        description="exact computations in the Johnson filtration of Aut(F_n)",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {johnsonfilt.__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    n = ("--n", _required_int("rank of the free group"))
    s = ("--s", _required_int("degree"))
    q = ("--q", _required_int("alphabet size or index q"))
    k = ("--k", _required_int("index k"))
    seed = ("--seed", {"type": int, "default": None, "help": "random seed"})
    samples = ("--samples", {"type": int, "default": 50, "help": "number of samples"})

    _add(sub, "witt", _cmd_witt, common, "Witt rank d_s(V_q)", [q, s])
    _add(sub, "lyndon", _cmd_lyndon, common, "Lyndon words and bracketings", [q, s])
    _add(
        sub,
        "magnus",
        _cmd_magnus,
        common,
        "Magnus expansion of a word",
        [
            n,
            ("--word", {"required": True, "help": "word, e.g. '[x1,x2] x3'"}),
            ("--trunc", _required_int("truncation degree D")),
        ],
    )
    _add(
        sub,
        "tau",
        _cmd_tau,
        common,
        "Johnson degree and Johnson homomorphism of an AutWord",
        [
            n,
            (
                "--aut",
                {
                    "required": True,
                    "help": "AutWord, u*v applies v first; "
                    "tau of [a(3,1), a(3,2)] sends x3 to -[[x1,x2],x3]",
                },
            ),
            ("--cap", {"type": int, "default": None, "help": "largest degree tested"}),
        ],
    )

    verify = sub.add_parser("verify", help="verification suites").add_subparsers(
        dest="suite", required=True
    )
    _add(verify, "mccool", _cmd_verify_mccool, common, "McCool relations", [n])
    _add(verify, "commuting", _cmd_verify_commuting, common, "factors of H(n,k)", [n, k])
    _add(
        verify,
        "prop62",
        _cmd_verify_prop62,
        common,
        "action and Johnson image of nested commutators",
        [n, q, ("--rs", {"type": _int_list, "required": True, "help": "r_1,...,r_m"})],
    )
    _add(
        verify,
        "conjugation",
        _cmd_verify_conjugation,
        common,
        "action of products of alpha(q, r)",
        [
            n,
            q,
            ("--rs", {"type": _int_list, "required": True, "help": "r_1,...,r_m"}),
            ("--signs", {"type": _int_list, "default": None, "help": "e_1,...,e_m"}),
        ],
    )
    _add(
        verify,
        "projection",
        _cmd_verify_projection,
        common,
        "projection to rank n-1 on random AutWords",
        [n, samples, seed],
    )
    _add(
        verify,
        "injectivity",
        _cmd_verify_injectivity,
        common,
        "rank of Johnson images of H(n,k)",
        [n, k, s],
    )
    _add(
        verify,
        "lie-morphism",
        _cmd_verify_lie_morphism,
        common,
        "Johnson images of commutators versus derivation brackets",
        [n, samples, seed],
    )

    rank = sub.add_parser("ranks", help="rank formulas").add_subparsers(
        dest="table", required=True
    )
    _add(rank, "gr", _cmd_ranks_gr, common, "graded ranks of the McCool group", [n, s])
    _add(rank, "summand", _cmd_ranks_summand, common, "tensor summand ranks", [n, k, s])
    _add(
        rank,
        "bound",
        _cmd_ranks_bound,
        common,
        "cohomology lower bound",
        [n, s, ("--i", _required_int("cohomological degree"))],
    )
    _add(
        rank,
        "growth",
        _cmd_ranks_growth,
        common,
        "growth of the lower bound in s",
        [
            n,
            ("--i", _required_int("cohomological degree")),
            ("--smin", {"type": int, "default": 1, "help": "first degree"}),
            ("--smax", _required_int("last degree")),
        ],
    )
    _add(
        rank,
        "pbw",
        _cmd_ranks_pbw,
        common,
        "product formula coefficients",
        [q, ("--smax", _required_int("last degree"))],
    )
    _add(
        sub,
        "ep",
        _cmd_ep,
        common,
        "Euler-Poincaré coefficients of the derivation algebra",
        [
            n,
            ("--smax", _required_int("last degree")),
            ("--hat", {"action": "store_true", "help": "include degree 0"}),
        ],
    )

    return parser


def _configure_logging(verbose):

    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG

    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv=None):
    """
    run the command line interface

    Returns
    -------
    code : int
        0 on success, 1 if a verification failed, 2 on usage or parse errors.
    """

    parser = build_parser()
    args = parser.parse_args(argv)

    _configure_logging(args.verbose)
    logger.info("running %s", args.command)

    try:
        return args.func(args)
    except ParseError as err:
        print(f"johnsonfilt: parse error: {err}", file=sys.stderr)
    except ValueError as err:
        print(f"johnsonfilt: error: {err}", file=sys.stderr)

    return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
