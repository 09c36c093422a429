from knot_uncertainty.commands import Command, run_config_from_args
from knot_uncertainty.services.report_service import ReportService
from knot_uncertainty.services.verification_service import VerificationService
from knot_uncertainty.utils.constants import EXIT_OK, EXIT_VIOLATION

verify_ur_cmd = Command('verify-ur', help='uncertainty relations, MRL inequality and combined relation')
verify_ur_cmd.argument('--thin-commutator', action='store_true',
                       help='also report the right-hand sides built from the thin closed-form commutators')


@verify_ur_cmd.handler
def run_verify_ur(args) -> int:
    cfg = run_config_from_args(args)
    bundle = VerificationService.cmd_verify_ur(cfg)
    ReportService.write(ReportService.render(bundle.to_dict(), cfg.output_format), args.out)
    return EXIT_OK if bundle.all_checks_pass() else EXIT_VIOLATION
