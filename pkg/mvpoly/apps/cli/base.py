import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from mvpoly.apps.bz.types import BZDatum
from mvpoly.apps.core.exceptions import (
    CapExceededError,
    CartanMatrixError,
    ClassicalCoordsError,
    ConflictError,
    InvalidDatumError,
    InvalidPositionError,
    MVPolytopeError,
    NotFiniteTypeError,
    UnsupportedTypeError,
)
from mvpoly.apps.rootdatum.classical import cartan_type
from mvpoly.apps.rootdatum.datum import RootDatum

from .exceptions import BZFileError
from .formats import parse_bz_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NULL = 1
EXIT_INVALID = 2
EXIT_UNSUPPORTED = 3
EXIT_LIMIT = 4
EXIT_PARSE = 64


def exit_code_for(exc: Exception) -> int:
    if isinstance(exc, NotFiniteTypeError):
        return EXIT_INVALID
    if isinstance(exc, (BZFileError, CartanMatrixError)):
        return EXIT_PARSE
    if isinstance(exc, UnsupportedTypeError):
        return EXIT_UNSUPPORTED
    if isinstance(exc, (CapExceededError, ConflictError)):
        return EXIT_LIMIT
    if isinstance(exc, (InvalidDatumError, InvalidPositionError, ClassicalCoordsError)):
        return EXIT_INVALID
    return EXIT_LIMIT


class MVCommand(BaseCommand):
    """
    Base class for the mvpoly commands.

    Subclasses implement run(); library errors are turned into CommandError
    with the exit code of the command-line contract.
    """

    def run(self, *args, **options) -> None:
        raise NotImplementedError

    def handle(self, *args, **options) -> None:
        try:
            self.run(*args, **options)
        except (BZFileError, MVPolytopeError) as e:
            code = exit_code_for(e)
            logger.debug(f"{type(e).__name__} mapped to exit code {code}")
            raise CommandError(str(e), returncode=code)

    def read_datum(self, path: str) -> BZDatum:
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise BZFileError(f"Cannot read {path}: {e}")
        return parse_bz_json(text)

    def read_type(self, name: str) -> RootDatum:
        return cartan_type(name)

    def check_node(self, datum: RootDatum, j: int) -> int:
        if j not in datum.nodes:
            raise BZFileError(f"Node {j} is not in 1..{datum.rank}")
        return j
