"""Exception types shared by the toolkit and the command-line stages.

Each error carries the process exit code the pipeline reports for it.
"""


class OpinionError(Exception):
    exit_code = 1
    kind = 'error'

    def __init__(self, msg, **details):
        super(OpinionError, self).__init__(msg)
        self.details = details

    def describe(self):
        extra = ', '.join(f'{k}={v}' for k, v in sorted(self.details.items()))
        return f'{self.kind}: {self}' + (f' ({extra})' if extra else '')


class MalformedInputError(OpinionError):
    kind = 'malformed-input'


class MissingInputError(OpinionError):
    exit_code = 2
    kind = 'missing-input'


class ConfigError(OpinionError):
    exit_code = 3
    kind = 'config'


class EmptyDomainError(OpinionError):
    exit_code = 4
    kind = 'empty-domain'


class UndefinedValueError(OpinionError, ValueError):
    kind = 'undefined'


class GraphError(OpinionError, ValueError):
    kind = 'graph'
