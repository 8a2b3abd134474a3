from .main import main, run
from .parser import ContextSpec, ParseError, evaluate, parse, parse_element, parse_word

__all__ = ["ContextSpec", "ParseError", "evaluate", "main", "parse", "parse_element", "parse_word", "run"]
