# parse_config.py ---

import argparse
import os
from parse import parse

from .errors import ConfigError


_TRUE = {'1', 'true', 'yes', 'on'}
_FALSE = {'0', 'false', 'no', 'off'}
# where the record itself is written, or not an option at all
_NOT_RECORDED = ('command', 'config', 'output_dir', 'log_file')


class _ArgumentGroup():
    # argparse group that remembers which destinations it owns
    def __init__(self, group, dests):
        self._group = group
        self._dests = dests

    def add_argument(self, *args, **kwargs):
        action = self._group.add_argument(*args, **kwargs)
        self._dests.append(action.dest)
        return action


class HierarchyArgmentParser():
    """Subcommand parser whose option groups become nested namespaces.

    Groups listed in ``flatten_args`` land on the top-level namespace, every
    other group ``name`` is available as ``opt.name.<dest>``. All groups are
    shared by every subcommand. A flat ``key: value`` file passed through
    ``--config`` provides defaults; explicit flags win over it.
    """

    def __init__(self, prog=None, description=None, version=None, flatten_args=['experiment']):
        super(HierarchyArgmentParser, self).__init__()
        self.flatten_args = flatten_args
        self.parser = argparse.ArgumentParser(prog=prog, description=description)
        if version is not None:
            self.parser.add_argument('--version', action='version', version=f'%(prog)s {version}')
        self.common = argparse.ArgumentParser(add_help=False)
        self.common.add_argument('--config', type=str, default=None,
                                 help='flat "key: value" file with option defaults')
        self.parser_list = {}
        self.commands = {}
        self._sub_parsers = None

    def add_parser(self, name):
        self.parser_list[name] = []
        return _ArgumentGroup(self.common.add_argument_group(name), self.parser_list[name])

    def add_command(self, name, help=None):
        if self._sub_parsers is not None:
            raise RuntimeError('commands must be registered before parsing')
        self.commands[name] = help

    def _build(self):
        if self._sub_parsers is None:
            sub = self.parser.add_subparsers(dest='command', metavar='COMMAND')
            sub.required = True
            self._sub_parsers = {name: sub.add_parser(name, parents=[self.common], help=help)
                                 for name, help in self.commands.items()}
        return self._sub_parsers

    def parse_args(self, argv=None):
        sub_parsers = self._build()
        opt_all = self.parser.parse_args(argv)
        if opt_all.config is not None:
            defaults = self.typed_defaults(load_config(opt_all.config))
            for sub_parser in sub_parsers.values():
                sub_parser.set_defaults(**defaults)
            opt_all = self.parser.parse_args(argv)
        return self._nest(opt_all)

    def typed_defaults(self, values):
        actions = {a.dest: a for a in self.common._actions}
        typed = {}
        for key, raw in values.items():
            if key not in actions or key == 'config':
                raise ConfigError(f'unknown config key "{key}"')
            action = actions[key]
            if isinstance(action, argparse._StoreTrueAction):
                if raw.lower() not in _TRUE | _FALSE:
                    raise ConfigError(f'config key "{key}" expects a boolean, got "{raw}"')
                value = raw.lower() in _TRUE
            elif action.type is not None:
                try:
                    value = action.type(raw)
                except (TypeError, ValueError):
                    raise ConfigError(f'config key "{key}" cannot parse "{raw}"')
            else:
                value = raw
            if action.choices is not None and value not in action.choices:
                raise ConfigError(f'config key "{key}" must be one of {list(action.choices)}')
            typed[key] = value
        return typed

    def _nest(self, opt_all):
        opt = argparse.Namespace()
        owned = set()
        for name, dests in self.parser_list.items():
            owned.update(dests)
            values = {d: getattr(opt_all, d) for d in dests}
            if name in self.flatten_args:
                for key, value in values.items():
                    setattr(opt, key, value)
            else:
                setattr(opt, name, argparse.Namespace(**values))
        for key, value in vars(opt_all).items():
            if key not in owned:
                setattr(opt, key, value)
        return opt


def load_config(path):
    if not os.path.isfile(path):
        raise ConfigError(f'config file does not exist: {path}')
    values = {}
    with open(path, 'r', encoding='utf-8') as fin:
        for lineno, line in enumerate(fin, 1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            parsed = parse('{key}:{value}', line) or parse('{key}:', line)
            if parsed is None:
                raise ConfigError(f'{path}:{lineno}: expected "key: value", got "{line}"')
            key = parsed['key'].strip().replace('-', '_')
            if key in values:
                raise ConfigError(f'{path}:{lineno}: duplicate key "{key}"')
            values[key] = parsed.named.get('value', '').strip()
    return values


def dump_args(opt):
    args = {}
    for k, v in vars(opt).items():
        if isinstance(v, argparse.Namespace):
            args[k] = vars(v)
        else:
            args[k] = v
    return args


def save_config(opt, path):
    # reloadable record of the resolved options, None values are left out
    lines = []
    for k, v in sorted(dump_args(opt).items()):
        if isinstance(v, dict):
            lines.append(f'# {k}')
            lines.extend(f'{kk}: {vv}' for kk, vv in sorted(v.items()) if vv is not None)
        elif v is not None and k not in _NOT_RECORDED:
            lines.append(f'{k}: {v}')
    with open(path, 'w', encoding='utf-8', newline='\n') as fout:
        fout.write('\n'.join(lines) + '\n')
    return path
