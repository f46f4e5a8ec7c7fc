"""
Command line runner for the verification suites.

    python verify.py --suite spectral --p 3,5 --format csv

Exit status: 0 when every check passes, 1 when any check fails, 2 on a
usage error (no report is written then).
"""

from dotenv import load_dotenv

load_dotenv()

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from config import Config
from models.errors import UsageError
from models.report import FAIL, VerificationReport
from models.suite_config import FORMATS, SuiteConfig
from parsers.suite_config_parser import SuiteConfigParser
from services.suite_manager import ALL, suite_manager
from tools.report_writer import write_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _int_list(value: str) -> List[int]:
    try:
        return [int(v) for v in value.split(',') if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got '{value}'")


def _str_list(value: str) -> List[str]:
    return [v.strip() for v in value.split(',') if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Verify the local and global identities of GL(2) toric periods.")
    parser.add_argument('--suite', help=f"suite name or '{ALL}'")
    parser.add_argument('--p', dest='primes', type=_int_list, help="odd primes, comma separated")
    parser.add_argument('--case', dest='cases', type=_str_list, help="inert, ramified, ramified-va1")
    parser.add_argument('--cpi', dest='c_pi', type=_int_list, help="conductor exponents of pi")
    parser.add_argument('--comega', dest='c_omega', type=_int_list, help="offsets c(Omega) - c(pi)")
    parser.add_argument('--prec', dest='precision', type=int, help="p-adic working precision")
    parser.add_argument('--tol', dest='tolerance', type=float, help="absolute tolerance")
    parser.add_argument('--format', dest='fmt', choices=FORMATS, help="report format")
    parser.add_argument('--seed', type=int, help="seed of the randomised checks")
    parser.add_argument('--samples', type=int, help="instances per randomised property")
    parser.add_argument('--omega-sample', dest='omega_sample', type=int,
                        help="Omegas per spectral grid point, seeded; 0 sweeps all")
    parser.add_argument('--out', help="report path")
    parser.add_argument('--config', help="key = value file; flags override it")
    return parser


def resolve_config(args: argparse.Namespace) -> SuiteConfig:
    overrides: Dict[str, Any] = {k: v for k, v in vars(args).items() if k != 'config' and v is not None}
    if args.config:
        return SuiteConfigParser(args.config).to_config(overrides)
    return SuiteConfig.from_dict(overrides)


def print_summary(report: VerificationReport, path) -> None:
    summary = report.summary()
    mark = "✓" if summary['fail'] == 0 else "✗"
    print(f"{mark} {report.suite}: {summary['pass']} passed, {summary['fail']} failed, "
          f"{summary['skipped']} skipped of {summary['total']}")
    for record in [r for r in report.records if r.status == FAIL][:10]:
        print(f"   ✗ {record.check_id}: {record.reason}")
    print(f"📄 Report: {path}")


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=Config.LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        report = suite_manager.run_suite(cfg)
        path = write_report(report, cfg.fmt, cfg.out)
    except UsageError as e:
        print(f"✗ {e}", file=sys.stderr)
        return EXIT_USAGE
    print_summary(report, path)
    return EXIT_FAIL if report.failed else EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
