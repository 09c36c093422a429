from knot_uncertainty.commands import Command, parse_float_list, run_config_from_args
from knot_uncertainty.services.report_service import ReportService
from knot_uncertainty.services.verification_service import VerificationService
from knot_uncertainty.utils.constants import DEFAULT_SWEEP_GAMMAS, EXIT_OK, EXIT_VIOLATION

sweep_gamma_cmd = Command('sweep-gamma', help='embedding error, UR margins and discrepancies per aspect ratio')
sweep_gamma_cmd.argument('--gammas', default=','.join(f'{g:g}' for g in DEFAULT_SWEEP_GAMMAS),
                         help='comma separated aspect ratios, each > 1')


@sweep_gamma_cmd.handler
def run_sweep_gamma(args) -> int:
    cfg = run_config_from_args(args)
    gammas = parse_float_list(args.gammas, 'gammas')
    frame = VerificationService.cmd_sweep_gamma(cfg, gammas)
    ReportService.write(ReportService.render_frame(frame, cfg.output_format), args.out)
    return EXIT_OK if bool(frame['all_satisfied'].all()) else EXIT_VIOLATION
