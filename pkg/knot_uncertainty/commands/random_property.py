from knot_uncertainty.commands import Command, run_config_from_args
from knot_uncertainty.services.report_service import ReportService
from knot_uncertainty.services.verification_service import VerificationService
from knot_uncertainty.utils.constants import DEFAULT_TRIALS, EXIT_OK, EXIT_VIOLATION

random_property_cmd = Command('random-property', help='Robertson inequality over seeded random superpositions')
random_property_cmd.argument('--trials', type=int, default=DEFAULT_TRIALS)


@random_property_cmd.handler
def run_random_property(args) -> int:
    cfg = run_config_from_args(args)
    summary = VerificationService.cmd_random_property(cfg, args.trials)
    ReportService.write(ReportService.render(summary, cfg.output_format), args.out)
    return EXIT_OK if summary['violation_count'] == 0 else EXIT_VIOLATION
