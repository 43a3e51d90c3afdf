"""Analysis toolkit for two-qubit X states under the map rho -> rho^n / Tr rho^n."""

from .xstate import (
    EPS_PSD,
    EPS_TRACE,
    ChannelResult,
    InvalidStateError,
    StateClass,
    XParams,
    XSpectrum,
    ZeroDenominatorError,
    apply_power_channel,
    classify,
    is_valid,
    ppt,
    reduced,
    spectrum,
    validate,
    werner,
    werner_entanglement_threshold,
    werner_entanglement_threshold_lower,
)
from .dense import (
    NonHermitianError,
    ZeroTraceError,
    hermitian_eig4,
    matrix_power_normalize,
    to_dense,
    trace_norm,
)
from .tomography import (
    Direction,
    InvalidAngleError,
    TomogramTable,
    direction_pairs,
    marginals,
    su2_matrix,
    tomogram,
    tomogram_dense_oracle,
    werner_tomogram,
)
from .information import (
    InequalityCheck,
    InfoReport,
    InvalidSpectrumError,
    ShannonReport,
    check_inequalities,
    shannon_report,
    shannon_report_from_table,
    system_entropies,
    von_neumann_entropy,
    werner_mutual_information,
)
from .entanglement import (
    EntanglementReport,
    concurrence,
    entanglement_report,
    negativity,
    spin_flip,
)

__version__ = "0.1.0"

__all__ = [
    "EPS_PSD",
    "EPS_TRACE",
    "ChannelResult",
    "Direction",
    "EntanglementReport",
    "InequalityCheck",
    "InfoReport",
    "InvalidAngleError",
    "InvalidSpectrumError",
    "InvalidStateError",
    "NonHermitianError",
    "ShannonReport",
    "StateClass",
    "TomogramTable",
    "XParams",
    "XSpectrum",
    "ZeroDenominatorError",
    "ZeroTraceError",
    "apply_power_channel",
    "check_inequalities",
    "classify",
    "concurrence",
    "direction_pairs",
    "entanglement_report",
    "hermitian_eig4",
    "is_valid",
    "marginals",
    "matrix_power_normalize",
    "negativity",
    "ppt",
    "reduced",
    "shannon_report",
    "shannon_report_from_table",
    "spectrum",
    "spin_flip",
    "su2_matrix",
    "system_entropies",
    "to_dense",
    "tomogram",
    "tomogram_dense_oracle",
    "trace_norm",
    "validate",
    "von_neumann_entropy",
    "werner",
    "werner_entanglement_threshold",
    "werner_entanglement_threshold_lower",
    "werner_mutual_information",
    "werner_tomogram",
]
