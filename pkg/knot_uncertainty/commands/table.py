from knot_uncertainty.commands import Command, run_config_from_args
from knot_uncertainty.services.report_service import ReportService
from knot_uncertainty.services.verification_service import VerificationService
from knot_uncertainty.utils.constants import EXIT_OK, EXIT_VIOLATION

table_cmd = Command('table', help='expectation values and standard deviations, closed form vs quadrature')


@table_cmd.handler
def run_table(args) -> int:
    cfg = run_config_from_args(args)
    bundle = VerificationService.cmd_table(cfg)
    ReportService.write(ReportService.render(bundle.to_dict(), cfg.output_format), args.out)
    return EXIT_OK if all(d.passed for d in bundle.discrepancies) else EXIT_VIOLATION
