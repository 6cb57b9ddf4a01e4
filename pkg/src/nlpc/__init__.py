"""Linear (LPC-12) vs nonlinear (small-MLP) short-term speech prediction toolkit."""

__version__ = "0.1.0"

from .audio import AudioSignal, Frame, FrameConfig, classify_frame, frame_signal, load_audio, normalize, save_audio
from .errors import (
    ArgumentError,
    ConversionSingularError,
    DegenerateFrameError,
    EmptyInputError,
    FormatError,
    NlpcError,
    NumericalSingularityError,
    SizeError,
    TrainingFailedError,
)
from .lattice import (
    DispersionReport,
    LatticeBranch,
    LatticeMlp,
    dispersion_report,
    fir_to_lattice,
    lattice_mlp_forward,
    lattice_to_fir,
    mlp_to_lattice,
)
from .lpc import (
    GainResult,
    LpcModel,
    analyze_frame,
    autocorrelation,
    levinson_durbin,
    lpc_residual,
    lpc_synthesize,
    prediction_gain,
)
from .mlp import (
    MlpPredictor,
    TrainConfig,
    TrainTrace,
    activation_sigmoid,
    draw_init,
    mlp_forward,
    mlp_jacobian,
    mlp_predict_frame,
    train_bp,
    train_lm,
    train_multi_init,
)
from .quant import (
    OscillationResult,
    QuantSweepResult,
    UniformQuantizer,
    analysis_gain_sweep,
    detect_divergence,
    nn_synthesize,
    quantize_predictor_params,
    residual_quant_experiment,
    synthesis_gain_sweep,
)
from .report import (
    FrameGainRecord,
    GainScatter,
    GainTable,
    ResidualHistogram,
    gain_scatter,
    gain_table,
    residual_histogram,
)
