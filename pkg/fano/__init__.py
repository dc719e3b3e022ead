from fano.albanese import PeriodLattice, candidate, select_H1
from fano.eisenstein import EisensteinInt, EisensteinRational, EisVector
from fano.fermat import CurveLabel, DivisorClass
from fano.fibrations import LinearForm
from fano.forms import parse_linear_form
from fano.group import MonomialMatrix, enumerate_group
from fano.lattice import Lattice, TwoForm, pfaffian
from fano.verify import emit_report, run_suite
