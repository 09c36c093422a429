"""Services package"""
from .geometry_service import GeometryService
from .quadrature_service import QuadratureService
from .quantum_service import QuantumService
from .analytic_service import AnalyticService
from .verification_service import VerificationService
from .report_service import ReportService

__all__ = [
    'GeometryService',
    'QuadratureService',
    'QuantumService',
    'AnalyticService',
    'VerificationService',
    'ReportService',
]
