import pytest

from pgwa.ore import GWAParams
from pgwa.parse import parse_poly

P_TEXTS = ["h+1", "h^2+1", "h^2+h", "(h-1)^2", "h^3+h", "h^3+h+1", "h^-1+h", "(h^2+1)^2"]


def H(text):
    return parse_poly(text, ("h",))


def TH(text):
    return parse_poly(text, ("t", "h"))


@pytest.fixture(params=P_TEXTS)
def params(request):
    return GWAParams(H(request.param))
