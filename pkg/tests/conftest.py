import sys

import pytest
from hypothesis import settings

from pascalrow import bignat

# Tests cross-check against native ints whose decimal renderings exceed
# CPython's default str-conversion guard.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(2_000_000)

settings.register_profile("pascalrow", deadline=None)
settings.load_profile("pascalrow")


@pytest.fixture(autouse=True)
def _restore_multiplication_threshold():
    saved = bignat.karatsuba_threshold()
    yield
    bignat.set_karatsuba_threshold(saved)
