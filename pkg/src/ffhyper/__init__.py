"""Exact hypergeometric functions over finite fields and machine checks of their identities."""
from .characters import MultChar, characters, quadratic, trivial
from .cyclotomic import CycNum, CyclotomicField, cyclotomic_field
from .errors import (
    BoundExceeded,
    ConductorMismatch,
    DivisionByZero,
    EvenCharacteristic,
    FFHyperError,
    LogOfZero,
    NotDivisible,
    NotOddPrime,
    NotPrime,
    NotPrimePower,
    UnknownTheorem,
    ZeroArgument,
)
from .finite_field import FieldCtx, FqElem, build_field, field_of_order
from .gauss import gauss_sum, jacobi_sum
from .hypergeometric import HypSpec, evaluate, evaluator, f_greene, f_katz, f_star
from .modular import eta_product_coeffs, verify_ao
from .theorems import SweepPlan, TheoremReport, run_suite, run_theorem

__version__ = "0.1.0"
