import logging
import uuid

import flask


def get_run_id():
    """
    Returns the ID of the current CLI invocation or a new one if there is none
    In order of preference:
    * If we've already created a run ID and stored it in the flask.g context local, use that
    * If RUN_ID is set in the app config (e.g. passed by a scheduler), use that
    * Otherwise, generate a run ID and store it in flask.g.run_id
    :return:
    """
    if getattr(flask.g, 'run_id', None):
        return flask.g.run_id

    run_id = flask.current_app.config.get('RUN_ID') or uuid.uuid4().hex[:12]
    flask.g.run_id = run_id

    return run_id


class RunIdFilter(logging.Filter):
    """
    Makes the run ID available for use in the logging format. Library code can
    log outside of an app context (e.g. joblib workers), so the ID is blank there.
    """
    def filter(self, record):
        record.run_id = get_run_id() if flask.has_app_context() else '-'
        return True
