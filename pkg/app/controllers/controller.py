from app.core.executor import Executor


class Controller:
    executor = Executor.getInstance()
