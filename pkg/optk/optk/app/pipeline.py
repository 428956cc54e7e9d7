import os
import random
import numpy as np

from .logger import get_logger
from .timer import Timer
from .summary import Summary
from .parse_config import save_config
from .errors import OpinionError, ConfigError


class Pipeline():
    """Base stage runner.

    Subclasses implement one ``stage_<name>`` method per subcommand and list
    the order used by ``all`` in ``all_stages``. Every stage reads its inputs
    from files and writes its artifacts to files, so ``all`` is the plain
    concatenation of the single stages.
    """

    # stages that draw random numbers and therefore need --seed
    stochastic_stages = ()
    required_opts = ('command', 'output_dir', 'seed', 'num_thread')

    def __init__(self, opt):

        super(Pipeline, self).__init__()
        self.check_opt(opt)

        # create logger
        self.logger = get_logger()
        if getattr(self.opt, 'log_file', None):
            self.logger.add_file(self.opt.log_file)
        if getattr(self.opt, 'verbose', False):
            self.logger.set_level('DEBUG')
        self.logger.log('Setup', f'Command: {self.opt.command}')

        # set random seed
        if self.opt.seed is not None:
            random.seed(self.opt.seed)
            np.random.seed(self.opt.seed)
            self.logger.log('Setup', f'Random seed has been set to {self.opt.seed}')

        self.root_dir = self.opt.output_dir

        # setup summary and timer
        self.summary = Summary()
        self.timer = Timer()

    def check_opt(self, opt):
        missing = [k for k in self.required_opts if not hasattr(opt, k)]
        if missing:
            raise ConfigError(f'options are missing keys: {missing}')
        if opt.num_thread < 1:
            raise ConfigError(f'--num-thread must be >= 1, got {opt.num_thread}')
        self.opt = opt

    def all_stages(self):
        raise NotImplementedError('Not implemented')

    def run(self, command=None):
        command = self.opt.command if command is None else command
        try:
            stages = self.all_stages() if command == 'all' else [command]
            for stage in stages:
                if stage in self.stochastic_stages and self.opt.seed is None:
                    raise ConfigError(f'stage "{stage}" is stochastic and needs --seed')
            if command == 'all':
                os.makedirs(self.root_dir, exist_ok=True)
                save_config(self.opt, os.path.join(self.root_dir, 'run_config.txt'))
            for stage in stages:
                self._run_stage(stage)
        except OpinionError as e:
            self.logger.error('Error', e.describe())
            return e.exit_code

        self.logger.log('Summary', self.summary.get())
        self.logger.log('Summary', f'Finished in {self.timer.total():.2f}s ({self.timer.report()})')
        return 0

    def _run_stage(self, stage):
        runner = getattr(self, f'stage_{stage}', None)
        if runner is None:
            raise ConfigError(f'no such stage: {stage}')
        self.logger.log('Stage', f'Running {stage}!')
        self.timer.set_point(stage)
        runner()
        self.logger.log('Stage', f'{stage} done in {self.timer.stop_point(stage):.2f}s')

    def out_path(self, name, explicit=None):
        # explicit --out for single stages, fixed names inside the output dir otherwise
        path = explicit if explicit else os.path.join(self.root_dir, name)
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        return path
