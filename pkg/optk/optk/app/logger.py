import sys
import logging


LOGGER_NAME = 'optk'
_shared = None


class Logger():
    def __init__(self, log_file=None, log_level=logging.INFO, name=LOGGER_NAME):

        # one logger per name, handlers are only attached once
        self.logger = logging.getLogger(name)
        self.logger.setLevel(log_level)
        self.log_format = logging.Formatter("#%(asctime)s# %(message)s",
                                            "%y-%m-%d %H:%M:%S")
        if not self.logger.handlers:
            # artifacts own stdout, logging goes to stderr only
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(self.log_format)
            self.logger.addHandler(console_handler)
        if log_file is not None:
            self.add_file(log_file)
        self.logger.propagate = False

    def add_file(self, log_file):
        for handler in self.logger.handlers:
            if isinstance(handler, logging.FileHandler) and handler.baseFilename == log_file:
                return
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(self.log_format)
        self.logger.addHandler(file_handler)

    def set_level(self, log_level):
        self.logger.setLevel(log_level)

    def log(self, scope, msg):
        self.logger.info(f'[{scope}] {msg}')

    def warning(self, scope, msg):
        self.logger.warning(f'[{scope}] {msg}')

    def debug(self, scope, msg):
        self.logger.debug(f'[{scope}] {msg}')

    def error(self, scope, msg):
        self.logger.error(f'[{scope}] {msg}')


def get_logger():
    global _shared
    if _shared is None:
        _shared = Logger()
    return _shared
