"""
Sigmoid Domain Serializers
DRF serializers for class parameters, radius results and oracle reports.
Shared by the management commands and the HTTP API.
"""

from rest_framework import serializers

from src.core.exceptions import DomainError

from .catalog import MAX_N, CsReading, ParamSet, validate_params


class ParamSetSerializer(serializers.Serializer):
    """Parses class parameters; missing fields take the ParamSet defaults."""

    A = serializers.FloatField(required=False)
    B = serializers.FloatField(required=False)
    alpha = serializers.FloatField(required=False)
    beta = serializers.FloatField(required=False)
    n = serializers.IntegerField(required=False, min_value=1, max_value=MAX_N)
    cs_reading = serializers.ChoiceField(
        choices=[reading.value for reading in CsReading],
        required=False,
    )

    def validate(self, attrs: dict) -> dict:
        """Check the parameters against the domain of the class in context."""
        class_id = self.context.get("class_id")
        if class_id is None:
            return attrs
        try:
            validate_params(class_id, self.build(attrs))
        except DomainError as e:
            raise serializers.ValidationError(e.detail) from e
        return attrs

    @staticmethod
    def build(attrs: dict) -> ParamSet:
        values = dict(attrs)
        if "cs_reading" in values:
            values["cs_reading"] = CsReading(values["cs_reading"])
        return ParamSet().with_updates(**values)

    def to_params(self) -> ParamSet:
        return self.build(self.validated_data)


class RadiusResultSerializer(serializers.Serializer):
    """RadiusResult as {"class", "params", "value", "method", "residual"}."""

    def get_fields(self) -> dict:
        return {
            "class": serializers.CharField(source="class_id.value"),
            "params": serializers.DictField(source="relevant_params"),
            "value": serializers.FloatField(),
            "method": serializers.CharField(source="method.value"),
            "residual": serializers.FloatField(),
        }


class OracleReportSerializer(serializers.Serializer):
    """OracleReport with the relevant parameters only."""

    def get_fields(self) -> dict:
        return {
            "class": serializers.CharField(source="class_id.value"),
            "params": serializers.DictField(source="relevant_params"),
            "formula_radius": serializers.FloatField(),
            "oracle_radius": serializers.FloatField(),
            "abs_gap": serializers.FloatField(),
            "touch_angle": serializers.FloatField(),
            "max_modulus_at_formula_radius": serializers.FloatField(allow_null=True),
            "min_real_part_at_formula_radius": serializers.FloatField(allow_null=True),
            "sharp_at_bracket": serializers.BooleanField(),
            "status": serializers.CharField(source="status.value"),
            "notes": serializers.ListField(child=serializers.CharField()),
        }


class ConstantRowSerializer(serializers.Serializer):
    name = serializers.CharField()
    value = serializers.FloatField()
    quoted = serializers.FloatField(allow_null=True)
