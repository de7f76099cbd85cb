#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# chaincert - Rooted Cunningham chains and their length certificates

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

__main_name__ = "chaincert"
__license__ = "GPLv3"
__status__ = "Production/Stable"
from . import __version_v__

__version__ = __version_v__

import argparse
import json
import logging
import sys

from .arith import gcd
from .certificate import from_document, to_document, verify_certificate
from .certify import (
    certify_default,
    corollary_bound,
    stability_trace,
    tighten,
)
from .chain import LinearMap, complete_chain, rooted_chain
from .config import (
    DEFAULT_JOBS,
    DEFAULT_MAX_STEPS,
    DEFAULT_STABILITY_TERMS,
    ENV_FACTOR_BITS,
    get_factor_bits,
)
from .errors import (
    CertificateFormatError,
    ChainCertError,
    InvalidMapError,
    InvalidTask,
    NotDivisorOfA,
    NotPrime,
    SharedFactor,
    UsageError,
)
from .search import SearchTask, search_range, verify_bound_range, write_csv
from .sequence import s_terms

logger = logging.getLogger(__main_name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

PROGRAM_DESCRIPTION = """Rooted Cunningham chains under linear maps f(z) = az + b

                       Computes rooted and complete chains of primes, and emits
                       compositeness certificates that bound the length l(z) of
                       the chain rooted at z without iterating it. Every
                       certificate can be re-checked with one modular evaluation."""


# Configure argparser
def build_argument_parser():
    """Create the argument parser used by the CLI entrypoint."""

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--quiet",
        "-q",
        action="store_true",
        help="Suppress log output (only show errors and results)",
    )
    common.add_argument(
        "--verbose",
        action="store_true",
        help="Log every selection step and show search progress",
    )

    map_options = argparse.ArgumentParser(add_help=False)
    map_group = map_options.add_argument_group("map options", "f(z) = az + b")
    map_group.add_argument("--a", type=int, required=True, help="multiplier (a >= 2)")
    map_group.add_argument(
        "--b", type=int, required=True, help="offset (b >= 1, coprime to a)"
    )

    output_format = argparse.ArgumentParser(add_help=False)
    output_format.add_argument(
        "--format",
        choices=["text", "json"],
        default="text",
        help="human readable text (default) or a JSON document",
    )

    parser = argparse.ArgumentParser(
        prog=__main_name__,
        description=PROGRAM_DESCRIPTION,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Chains
  %(prog)s chain --a 2 --b 3 --root 32
  %(prog)s complete --a 2 --b 1 --p 11

  # Certificates
  %(prog)s certify --a 2 --b 3 --z 32 --tight --out root32.json
  %(prog)s certify --a 2 --b 1 --z 9
  %(prog)s certify --a 2 --b 3 --z 32 --corollary
  %(prog)s verify root32.json

  # Valuations of the backward sequence at a prime dividing a
  %(prog)s stability --a 2 --b 1 --z 9 --prime 2 --terms 4

  # Range work
  %(prog)s search --a 2 --b 3 --lo 1 --hi 400 --min-len 4 --jobs 4
  %(prog)s bounds --a 2 --b 3 --lo 22 --hi 100

Environment:
  """
        + f"{ENV_FACTOR_BITS}  factorization size guard in bits (default 512)",
    )
    parser.add_argument("--version", "-v", action="version", version=__version__)

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    chain = subparsers.add_parser(
        "chain",
        parents=[common, map_options, output_format],
        help="rooted chain f(z), f^2(z), ... up to the first composite",
    )
    chain.add_argument("--root", type=int, required=True, help="root z (z >= 1)")
    chain.add_argument(
        "--max-steps",
        type=int,
        default=DEFAULT_MAX_STEPS,
        help=f"stop after this many primes (default {DEFAULT_MAX_STEPS})",
    )

    certify = subparsers.add_parser(
        "certify",
        parents=[common, map_options],
        help="emit a compositeness certificate bounding l(z)",
    )
    certify.add_argument("--z", type=int, required=True, help="root z (z >= 2)")
    mode = certify.add_mutually_exclusive_group()
    mode.add_argument(
        "--tight",
        action="store_true",
        help="smallest witness over root divisors and every s-term with |s_i| <= z",
    )
    mode.add_argument(
        "--corollary",
        action="store_true",
        help="certify the root f(z) instead, which works for every z",
    )
    certify.add_argument("--out", help="write the certificate here instead of stdout")

    verify = subparsers.add_parser(
        "verify", parents=[common], help="check a certificate document"
    )
    verify.add_argument("path", help="certificate document (JSON)")

    stability = subparsers.add_parser(
        "stability",
        parents=[common, map_options, output_format],
        help="valuations nu_p(s_n) for a prime p dividing a",
    )
    stability.add_argument("--z", type=int, required=True, help="root z")
    stability.add_argument("--prime", type=int, required=True, help="prime p dividing a")
    stability.add_argument(
        "--terms",
        type=int,
        default=DEFAULT_STABILITY_TERMS,
        help=f"number of s-terms (default {DEFAULT_STABILITY_TERMS})",
    )

    search = subparsers.add_parser(
        "search",
        parents=[common, map_options],
        help="CSV of rooted chains over a range of roots",
    )
    range_group = search.add_argument_group("range options")
    range_group.add_argument("--lo", type=int, required=True, help="first root")
    range_group.add_argument("--hi", type=int, required=True, help="last root")
    range_group.add_argument(
        "--min-len", type=int, default=0, help="only report chains at least this long"
    )
    range_group.add_argument(
        "--max-steps",
        type=int,
        default=DEFAULT_MAX_STEPS,
        help=f"truncate chains at this many primes (default {DEFAULT_MAX_STEPS})",
    )
    search.add_argument(
        "--jobs",
        type=int,
        default=DEFAULT_JOBS,
        help="worker processes; the output does not depend on it",
    )
    search.add_argument("--progress", action="store_true", help="progress bar on stderr")
    search.add_argument("--out", help="write the CSV here instead of stdout")

    complete = subparsers.add_parser(
        "complete",
        parents=[common, map_options, output_format],
        help="complete chain through a prime, extended both ways",
    )
    complete.add_argument("--p", type=int, required=True, help="a prime")

    bounds = subparsers.add_parser(
        "bounds",
        parents=[common, map_options],
        help="certify every root of a range and cross-check with the chains",
    )
    bounds.add_argument("--lo", type=int, required=True, help="first root (>= 2)")
    bounds.add_argument("--hi", type=int, required=True, help="last root")
    bounds.add_argument(
        "--max-steps",
        type=int,
        default=DEFAULT_MAX_STEPS,
        help=f"chain iteration depth for the cross-check (default {DEFAULT_MAX_STEPS})",
    )

    return parser


def parse_args(argv=None):
    """Parse command line arguments.

    Exposed as a helper to make testing the CLI easier while avoiding side
    effects when the module is imported.
    """

    parser = build_argument_parser()
    return parser.parse_args(argv)


def _configure_logging(args):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose:
        level = logging.DEBUG
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _emit(text, out=None):
    """Write results to the --out file, or stdout."""
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def _as_json(document):
    return json.dumps(document, indent=2) + "\n"


def _map(args):
    return LinearMap(args.a, args.b)


def cmd_chain(args):
    """Rooted chain from --root"""
    f = _map(args)
    if args.root < 1:
        raise UsageError(f"--root must be >= 1 (got {args.root})")
    if args.max_steps < 1:
        raise UsageError(f"--max-steps must be >= 1 (got {args.max_steps})")

    chain = rooted_chain(f, args.root, args.max_steps)

    if args.format == "json":
        _emit(
            _as_json(
                {
                    "a": str(f.a),
                    "b": str(f.b),
                    "root": str(chain.root),
                    "elements": [str(x) for x in chain.elements],
                    "length": str(chain.length),
                    "terminator": (
                        None if chain.terminator is None else str(chain.terminator)
                    ),
                    "truncated": chain.truncated,
                }
            )
        )
        return EXIT_OK

    lines = [
        f"map: {f}",
        f"root: {chain.root}",
        f"elements: {' '.join(str(x) for x in chain.elements)}",
        f"length: {chain.length}",
    ]
    if chain.truncated:
        lines.append(f"truncated: reached max-steps={args.max_steps}, no terminator")
    else:
        lines.append(f"terminator: {chain.terminator}")
    _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_certify(args):
    """Certificate for --z: root divisor then s-term by default, --tight or --corollary"""
    f = _map(args)
    if args.z < 2:
        raise UsageError(f"--z must be >= 2 (got {args.z})")

    if args.tight:
        certificate = tighten(f, args.z, verbose=args.verbose)
    elif args.corollary:
        result = corollary_bound(f, args.z, verbose=args.verbose)
        if result.certificate is None:
            raise SharedFactor(args.z, f.b, gcd(args.z, f.b))
        certificate = result.certificate
        print(
            f"l({args.z}) < {result.bound} via the root f({args.z}) = {certificate.z}",
            file=sys.stderr,
        )
    else:
        certificate = certify_default(f, args.z, verbose=args.verbose)

    logger.info(certificate.describe())
    _emit(to_document(certificate), args.out)
    return EXIT_OK


def cmd_verify(args):
    """Check a certificate document"""
    try:
        with open(args.path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise UsageError(f"cannot read {args.path}: {e}") from None

    certificate = from_document(text)
    verdict = verify_certificate(certificate)
    if verdict:
        logger.info(certificate.describe())
        print("VALID")
        return EXIT_OK
    print(f"INVALID {verdict.reason}")
    return EXIT_FAILURE


def cmd_stability(args):
    """Valuation trace at --prime"""
    f = _map(args)
    if args.terms < 1:
        raise UsageError(f"--terms must be >= 1 (got {args.terms})")

    trace = stability_trace(f, args.z, args.prime, args.terms)
    terms = s_terms(f, args.z, args.terms).terms

    if args.format == "json":
        _emit(
            _as_json(
                {
                    "a": str(f.a),
                    "b": str(f.b),
                    "z": str(args.z),
                    "prime": str(args.prime),
                    "terms": [
                        {
                            "n": str(n),
                            "s_n": str(s),
                            "valuation": None if v is None else str(v),
                        }
                        for n, (s, v) in enumerate(zip(terms, trace.values), start=1)
                    ],
                    "stable_index": (
                        None if trace.stable_index is None else str(trace.stable_index)
                    ),
                }
            )
        )
        return EXIT_OK

    lines = [f"n\ts_n\tnu_{args.prime}(s_n)"]
    for n, (s, v) in enumerate(zip(terms, trace.values), start=1):
        lines.append(f"{n}\t{s}\t{'undefined' if v is None else v}")
    if trace.stable_index is None:
        lines.append("stable index: none")
    else:
        lines.append(f"stable index: {trace.stable_index}")
    _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_search(args):
    """CSV of chains with roots in --lo..--hi"""
    task = SearchTask(_map(args), args.lo, args.hi, args.min_len, args.max_steps)
    rows = search_range(task, jobs=args.jobs, progress=args.progress or args.verbose)

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as f:
            write_csv(rows, f)
        logger.info("wrote %d rows to %s", len(rows), args.out)
    else:
        write_csv(rows, sys.stdout)
    return EXIT_OK


def cmd_complete(args):
    """Complete chain through --p"""
    chain = complete_chain(_map(args), args.p)

    if args.format == "json":
        _emit(
            _as_json(
                {
                    "a": str(chain.map.a),
                    "b": str(chain.map.b),
                    "elements": [str(x) for x in chain.elements],
                    "lambda": str(chain.lambda_),
                }
            )
        )
        return EXIT_OK

    _emit(
        f"map: {chain.map}\n"
        f"elements: {' '.join(str(x) for x in chain.elements)}\n"
        f"lambda: {chain.lambda_}\n"
    )
    return EXIT_OK


def cmd_bounds(args):
    """Certify every root of --lo..--hi"""
    report = verify_bound_range(_map(args), args.lo, args.hi, args.max_steps)

    lines = ["root\tstatus\tprime\twitness\ttheorem\tlength"]
    for row in report.rows:
        c = row.certificate
        lines.append(
            "\t".join(
                [
                    str(row.root),
                    row.status.value,
                    "" if c is None else str(c.prime),
                    "" if c is None else str(c.witness_index),
                    row.theorem or "",
                    "" if row.chain_length is None else str(row.chain_length),
                ]
            )
        )
    _emit("\n".join(lines) + "\n")

    for row in report.failures:
        print(f"Error: root {row.root}: {row.status.value}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAILURE


COMMANDS = {
    "chain": cmd_chain,
    "certify": cmd_certify,
    "verify": cmd_verify,
    "stability": cmd_stability,
    "search": cmd_search,
    "complete": cmd_complete,
    "bounds": cmd_bounds,
}

# Errors caused by the invocation itself rather than by the mathematics
USAGE_ERRORS = (
    InvalidMapError,
    InvalidTask,
    NotPrime,
    NotDivisorOfA,
    CertificateFormatError,
    UsageError,
)


def main(argv=None):
    """Main entry point for chaincert"""

    args = parse_args(argv)
    _configure_logging(args)

    logger.debug("%s %s", __main_name__, __version__)
    logger.debug("factorization guard: %d bits", get_factor_bits())

    try:
        return COMMANDS[args.command](args)
    except USAGE_ERRORS as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ChainCertError as e:
        print(f"Error: {e.code}: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except KeyboardInterrupt:
        print("\n\nOperation cancelled by user", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
