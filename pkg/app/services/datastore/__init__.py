from app.services.datastore.csv_datastore import (
    CsvDatastore,
    emit_results_csv,
    load_csv,
    read_results_csv,
    write_frame,
    write_series_csv,
)

__all__ = [
    "CsvDatastore",
    "emit_results_csv",
    "load_csv",
    "read_results_csv",
    "write_frame",
    "write_series_csv",
]
