import time

from app import logger


class Executor:
    __instance = None

    @staticmethod
    def getInstance():
        """ Static access method. """
        if not Executor.__instance:
            Executor()
        return Executor.__instance

    def __init__(self):
        """ Virtually private constructor. """
        if Executor.__instance:
            raise Exception("This class is a singleton!")
        else:
            Executor.__instance = self

    @staticmethod
    def _run(command):
        name = command.__class__.__name__
        logger.info(f"Command {name} started")
        started = time.perf_counter()
        result = command.execute()
        logger.info(f"Command {name} finished in {time.perf_counter() - started:.3f}s")
        return result

    @staticmethod
    def execute_write(command):
        return Executor._run(command)
