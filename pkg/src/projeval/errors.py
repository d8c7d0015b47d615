"""Shared exception types."""


class ProjevalError(Exception):
    """Base class for all package errors."""


class ConfigError(ProjevalError):
    """Invalid rubric / profile configuration."""


class NoRuleFiredError(ProjevalError):
    """No rule in the base fired above zero for the given inputs."""


class EmptyAggregateError(ProjevalError):
    """Defuzzification requested on an all-zero membership curve."""


class TokenizeError(ProjevalError):
    """A source file could not be tokenized."""
