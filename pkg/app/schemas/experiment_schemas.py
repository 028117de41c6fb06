from marshmallow import ValidationError, fields, post_load, validate, validates_schema

from app.schemas import BaseSchema
from app.services.benchmark.synthetic import SyntheticSpec
from app.utils.enums import Algorithm, SyntheticKind


class SyntheticSpecSchema(BaseSchema):
    """A named synthetic dataset, e.g. ``{name: airpass, kind: trend_seasonal, n: 144, frequency: 12}``."""
    name = fields.String(required=True)
    kind = fields.String(required=True, validate=validate.OneOf(SyntheticKind.to_list()))
    n = fields.Integer(required=True, validate=validate.Range(min=1))
    frequency = fields.Integer(load_default=1, validate=validate.Range(min=1))
    noise_sigma = fields.Float(load_default=1.0, validate=validate.Range(min=0))
    seed = fields.Integer(load_default=1)

    @validates_schema
    def validate_frequency(self, data, **kwargs):
        if SyntheticKind(data["kind"]).has_seasonality and data.get("frequency", 1) < 2:
            raise ValidationError("Seasonal kinds need frequency >= 2.", field_name="frequency")

    @post_load
    def make_spec(self, data, **kwargs):
        name = data.pop("name")
        return name, SyntheticSpec(kind=SyntheticKind(data.pop("kind")), **data)


class ExperimentConfigSchema(BaseSchema):
    """
    The YAML document accepted by ``bench --config``. Every key is optional;
    absent keys fall back to the application config.
    """
    rates = fields.List(fields.Float(validate=validate.Range(min=0)), validate=validate.Length(min=1))
    seeds = fields.List(fields.Integer(), validate=validate.Length(min=1))
    algorithms = fields.List(
        fields.String(validate=validate.OneOf(Algorithm.to_list())), validate=validate.Length(min=1)
    )
    lags = fields.Integer(validate=validate.Range(min=1))
    n_jobs = fields.Integer()
    synthetic = fields.List(fields.Nested(SyntheticSpecSchema))


experiment_config_schema = ExperimentConfigSchema()
