#!/usr/bin/env python3
"""
VarSeq
Main entry point: runs one CLI command, optionally teeing its output to a log file.
"""

import re
import sys
from contextlib import ExitStack, contextmanager, redirect_stderr, redirect_stdout
from datetime import datetime
from pathlib import Path

from varseq.cli import run
from varseq.config_loader import get_config_dir, load_config

ANSI_ESCAPE = re.compile(r'\x1b\[[0-9;]*m')
KEEP_LOGS = 20


class _Tee:
    """Stream that forwards to the console and mirrors plain text into a log.

    A failing log write disables mirroring for the rest of the run; console
    output is never affected.
    """

    def __init__(self, console, log):
        self.console = console
        self.log = log

    def write(self, data):
        written = self.console.write(data)
        if data and self.log is not None:
            try:
                self.log.write(ANSI_ESCAPE.sub('', data))
            except (OSError, ValueError):
                self.log = None
        return written

    def flush(self):
        self.console.flush()
        if self.log is not None:
            try:
                self.log.flush()
            except (OSError, ValueError):
                self.log = None

    def __getattr__(self, name):
        return getattr(self.console, name)


def prune_logs(log_dir, prefix, keep=KEEP_LOGS):
    """Delete all but the `keep` newest `<prefix>_*.log` files; return what was removed."""
    removed = []
    for stale in sorted(Path(log_dir).glob(f'{prefix}_*.log'))[:-keep or None]:
        try:
            stale.unlink()
            removed.append(stale)
        except OSError:
            continue
    return removed


@contextmanager
def run_log(log_dir, prefix='VarSeq', keep=KEEP_LOGS, enabled=True):
    """Tee stdout and stderr into `<log_dir>/<prefix>_<timestamp>.log` while the block runs.

    Yields the log path, or None when logging is disabled or the file cannot be
    created.
    """
    if not enabled:
        yield None
        return
    log_dir = Path(log_dir)
    path = log_dir / f"{prefix}_{datetime.now():%Y-%m-%d_%H-%M-%S}.log"
    try:
        log_dir.mkdir(parents=True, exist_ok=True)
        log = open(path, 'w', encoding='utf-8', errors='replace')
    except OSError:
        yield None
        return
    with ExitStack() as stack:
        stack.callback(prune_logs, log_dir, prefix, keep)
        stack.enter_context(log)
        stack.enter_context(redirect_stdout(_Tee(sys.stdout, log)))
        stack.enter_context(redirect_stderr(_Tee(sys.stderr, log)))
        yield path


def _log_runs_requested(argv):
    # --config is parsed again by the CLI; here it only decides whether to tee
    config_path = None
    if '--config' in argv:
        position = argv.index('--config') + 1
        if position < len(argv):
            config_path = argv[position]
    return load_config(config_path)['log_runs']


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    with run_log(get_config_dir() / 'logs', enabled=_log_runs_requested(argv)):
        return run(argv)


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\nOperation cancelled by user")
        sys.exit(0)
