from ._constants import __version__
from ._common import IetForgeError
from ._main import Main, Budgets, Source
from ._cli import ietforge_cli
