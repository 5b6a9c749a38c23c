"""
Serializers for command options and report shapes.

Option serializers validate what the management commands receive; report
serializers fix the field set of every JSON document the commands write.
"""
from fractions import Fraction

from rest_framework import serializers


class RationalField(serializers.Field):
    """A non-negative rational written as "p/q" or as an integer."""

    default_error_messages = {
        "invalid": "Expected a rational such as 1/3.",
        "negative": "Rational must be positive.",
    }

    def to_internal_value(self, data):
        try:
            value = Fraction(str(data).strip())
        except (ValueError, ZeroDivisionError):
            self.fail("invalid")
        if value <= 0:
            self.fail("negative")
        return value

    def to_representation(self, value):
        return str(Fraction(value))


class LengthListField(serializers.Field):
    """Comma separated cycle lengths, e.g. "7,8"."""

    default_error_messages = {"invalid": "Expected comma separated integers >= 3."}

    def to_internal_value(self, data):
        if isinstance(data, str):
            parts = [p for p in data.replace(" ", "").split(",") if p]
        else:
            parts = list(data or ())
        try:
            lengths = frozenset(int(p) for p in parts)
        except (TypeError, ValueError):
            self.fail("invalid")
        if any(k < 3 for k in lengths):
            self.fail("invalid")
        return lengths

    def to_representation(self, value):
        return sorted(value)


class GenSpecSerializer(serializers.Serializer):
    """Validates the ``--gen n=N,count=C,seed=S`` generator spec."""
    n = serializers.IntegerField(min_value=4)
    count = serializers.IntegerField(min_value=1)
    seed = serializers.IntegerField(default=0)

    def validate_n(self, value):
        if value % 2:
            raise serializers.ValidationError("A cubic graph needs an even number of vertices.")
        return value

    @classmethod
    def parse(cls, text: str) -> dict:
        """Split "n=14,count=100,seed=1" into a dict and validate it."""
        raw = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            key, sep, value = part.partition("=")
            if not sep:
                raise serializers.ValidationError({"gen": f"'{part}' is not key=value"})
            raw[key.strip()] = value.strip()
        serializer = cls(data=raw)
        serializer.is_valid(raise_exception=True)
        return dict(serializer.validated_data)


class VerifyOptionsSerializer(serializers.Serializer):
    """Validates the filter and bound options of ``verify``."""
    min_girth = serializers.IntegerField(min_value=3, default=3)
    forbid = LengthListField(required=False, default=frozenset())
    bipartite = serializers.BooleanField(default=False)
    cubic = serializers.BooleanField(default=True)
    bound = RationalField(default=Fraction(1, 3))
    budget = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    jobs = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)


# ---------------------------------------------------------------------------
# Campaign reports
# ---------------------------------------------------------------------------

class CampaignRecordSerializer(serializers.Serializer):
    id = serializers.CharField()
    index = serializers.IntegerField()
    n = serializers.IntegerField()
    girth = serializers.IntegerField(allow_null=True)
    forbidden_hits = serializers.ListField(child=serializers.IntegerField())
    gamma = serializers.IntegerField()
    gamma_ratio = serializers.CharField()
    bound_holds = serializers.BooleanField(allow_null=True)
    optimal = serializers.BooleanField()
    budget_exceeded = serializers.BooleanField()
    rechecked = serializers.BooleanField(required=False)
    witness = serializers.ListField(child=serializers.IntegerField(), required=False)
    runtime_ms = serializers.IntegerField(allow_null=True)


class CampaignSummarySerializer(serializers.Serializer):
    count = serializers.IntegerField()
    filtered = serializers.IntegerField()
    violations = serializers.ListField(child=serializers.CharField())
    budget_flagged = serializers.ListField(child=serializers.CharField())
    unconfirmed = serializers.ListField(child=serializers.CharField())
    max_gamma_ratio = serializers.CharField(allow_null=True)
    bound = serializers.CharField()
    exit_code = serializers.IntegerField()


class CampaignReportSerializer(serializers.Serializer):
    records = CampaignRecordSerializer(many=True)
    summary = CampaignSummarySerializer()


# ---------------------------------------------------------------------------
# Reduction traces
# ---------------------------------------------------------------------------

class TraceStepSerializer(serializers.Serializer):
    rule = serializers.CharField()
    bindings = serializers.DictField()
    ell = serializers.IntegerField()
    removed = serializers.ListField(child=serializers.IntegerField())
    marked = serializers.ListField(child=serializers.IntegerField())
    unmarked = serializers.ListField(child=serializers.IntegerField())
    deleted_edges = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    dominators = serializers.ListField(child=serializers.IntegerField())
    alpha = serializers.IntegerField(min_value=0)
    beta_claimed = serializers.IntegerField()
    beta_actual = serializers.IntegerField()


class TraceSerializer(serializers.Serializer):
    graph6 = serializers.CharField()
    n = serializers.IntegerField()
    marked = serializers.ListField(child=serializers.IntegerField())
    total_alpha = serializers.IntegerField()
    steps = TraceStepSerializer(many=True)


class CertificateSerializer(serializers.Serializer):
    dominating_set = serializers.ListField(child=serializers.IntegerField())
    size = serializers.IntegerField()
    weight = serializers.IntegerField()
    holds = serializers.BooleanField()


class ReduceRecordSerializer(serializers.Serializer):
    id = serializers.CharField()
    index = serializers.IntegerField()
    n = serializers.IntegerField()
    steps = serializers.IntegerField()
    residual_n = serializers.IntegerField()
    residual_graph6 = serializers.CharField(allow_blank=True)
    emptied = serializers.BooleanField()
    trace_path = serializers.CharField(allow_null=True)
    certificate = CertificateSerializer(allow_null=True)


# ---------------------------------------------------------------------------
# Discharge logs
# ---------------------------------------------------------------------------

class DischargeLogEntrySerializer(serializers.Serializer):
    step = serializers.IntegerField(min_value=1)
    rule = serializers.ChoiceField(choices=["R1", "R2", "R3"])
    cut = serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=2, max_length=2)
    stats = serializers.DictField(child=serializers.IntegerField(min_value=0))
    lhs = serializers.CharField()
    formula_applies = serializers.BooleanField()
    measure_before = serializers.ListField(child=serializers.IntegerField())
    measure_after = serializers.ListField(child=serializers.IntegerField())

    def validate(self, attrs):
        if not attrs["measure_after"] < attrs["measure_before"]:
            raise serializers.ValidationError("A logged switch must decrease the measure.")
        return attrs
