from fano.claims.arith import definition as arith
from fano.claims.fibrations import definition as fibrations
from fano.claims.group import definition as group
from fano.claims.ns_albanese import definition as ns_albanese
from fano.claims.ns_fermat import definition as ns_fermat
from fano.claims.period_lattice import definition as period_lattice
from fano.claims.twelve_family import definition as twelve_family
from fano.record import Record

CLAIMS = {
    "arith": arith,
    "group": group,
    "ns-fermat": ns_fermat,
    "period-lattice": period_lattice,
    "ns-albanese": ns_albanese,
    "fibrations": fibrations,
    "twelve-family": twelve_family,
}


def claims_for(suite: str) -> Record:
    """The claims of a suite as a Record keyed by claim id.

    Raises:
        KeyError: for a suite without claims
    """
    return Record.create_recursively(CLAIMS[suite])
