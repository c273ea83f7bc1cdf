"""Wright functions of the second kind and what is built on them.

M-Wright and F-Wright auxiliary functions, Green functions of the
time-fractional diffusion-wave equation, the three and four sister
functions, Riemann-Liouville and Caputo operators, and Levy stable
densities, together with numerical transform tools to cross-check them.
"""

__version__ = "0.1.0"

from .errors import (AccuracyLossWarning, ConvergenceError, DomainError, InstabilityWarning,
                     MissingInitialDataError, OscillationWarning, PoleError, SupportTruncationWarning,
                     WrightkitError)
from .results import (DensityValue, EvalResult, Method, PointMass, QuadratureControl, SeriesControl,
                      Smooth)
from .special import airy, erfc, gamma, mittag_leffler, rgamma
from .wright import (Kind, WrightParams, m_symmetric_pdf, m_two_var, wright_f, wright_m,
                     wright_second_kind, wright_w)
from .transforms import (ConvMode, Interp, LaplaceFamily, SampledFunction, bromwich_branchcut_invert,
                         convolve, cosine_transform, integrate, invert_family, laplace_fwd, talbot_invert)
from .fractional import (FracOrder, OpKind, SymbolKind, caputo_derivative, laplace_symbol, power_rule,
                         rl_derivative, rl_integral)
from .tfdwe import (GreenSpec, Problem, four_sisters, green_cauchy, green_laplace, green_signalling,
                    reciprocity, solve_cauchy, solve_signalling, three_sisters)
from .stable import StableParams, stable_density, stable_pdf, stable_scaled, validate
from .probability import (Axis, composition_check, m_abs_moment, m_char_fn, mvar_transform)

__all__ = [name for name in dir() if not name.startswith("_")]
