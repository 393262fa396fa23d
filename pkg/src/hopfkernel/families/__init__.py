from .core import (Element, HopfFamily, Relation, antipode, delta, delta_generated, element_mul,
                   epsilon, tensor_mul, verify_hopf)
from .bigd import BigD, Limit, Taft, format_mono, merge_tails, negate_tail, parse_mono
from .lifted import Lifted
