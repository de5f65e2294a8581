from ._version import __version__
from .base import *
from .csvio import *
from .elliptical import *
from .estimators import *
from .special import *
from .simulation import *
from .utils import *
from .weights import *
