import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from hochpar import parse_field  # noqa: E402

FIELDS = ("Q", "GF:2", "GF:3")
GOOD_FIXTURES = ("pcp2", "kgrp:Z2", "kgrp:Z3", "kgrp:S3")


@pytest.fixture(params=FIELDS)
def field(request):
    return parse_field(request.param)
