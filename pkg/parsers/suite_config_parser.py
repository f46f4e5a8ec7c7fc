from typing import Any, Dict, List

from models.errors import UsageError
from models.suite_config import SuiteConfig

INT_LIST_KEYS = ("primes", "c_pi", "c_omega")
STR_LIST_KEYS = ("cases",)
INT_KEYS = ("precision", "seed", "samples", "omega_sample")
FLOAT_KEYS = ("tolerance",)

# flag spellings accepted in the file
ALIASES = {
    "p": "primes",
    "case": "cases",
    "cpi": "c_pi",
    "comega": "c_omega",
    "prec": "precision",
    "tol": "tolerance",
    "format": "fmt",
    "omega-sample": "omega_sample",
}


class SuiteConfigParser:
    """
    Parser for flat ``key = value`` run configuration files.
    Lists are comma separated; ``#`` starts a comment.
    """

    def __init__(self, file_path: str):
        """
        Initialize the parser with the path to the configuration file.

        Args:
            file_path (str): Path to the key = value file
        """
        self.file_path = file_path
        self.values: Dict[str, Any] = {}
        self._load_data()

    def _load_data(self):
        try:
            with open(self.file_path, 'r', encoding='utf-8') as file:
                lines = file.readlines()
        except OSError as e:
            raise UsageError(f"Error loading configuration file: {e}")
        for number, raw in enumerate(lines, start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise UsageError(f"{self.file_path}:{number}: expected 'key = value'")
            key, value = (part.strip() for part in line.split('=', 1))
            key = ALIASES.get(key, key)
            self.values[key] = self._convert(key, value, number)

    def _convert(self, key: str, value: str, number: int) -> Any:
        try:
            if key in INT_LIST_KEYS:
                return [int(v) for v in _split(value)]
            if key in STR_LIST_KEYS:
                return _split(value)
            if key in INT_KEYS:
                return int(value)
            if key in FLOAT_KEYS:
                return float(value)
        except ValueError:
            raise UsageError(f"{self.file_path}:{number}: bad value '{value}' for {key}")
        return value

    def get_values(self) -> Dict[str, Any]:
        """Get the parsed key/value pairs."""
        return dict(self.values)

    def to_config(self, overrides: Dict[str, Any] = None) -> SuiteConfig:
        """Build a SuiteConfig from the file; explicit overrides win."""
        merged = {**self.values, **{k: v for k, v in (overrides or {}).items() if v is not None}}
        return SuiteConfig.from_dict(merged)


def _split(value: str) -> List[str]:
    return [v.strip() for v in value.split(',') if v.strip()]
