import re
from typing import Any

from rest_framework import serializers

from mvpoly.apps.bz.types import BZDatum
from mvpoly.apps.core.exceptions import CartanMatrixError, ClassicalCoordsError, NotFiniteTypeError
from mvpoly.apps.rootdatum.classical import from_cartan, parse_chamber_name
from mvpoly.apps.rootdatum.types import ClassicalKind
from mvpoly.apps.weyl.group import weyl_group
from mvpoly.apps.weyl.types import ChamberWeight

KEY_RE = re.compile(r"^L(\d+):(-?\d+(?:,-?\d+)*)$")


def parse_key(key: str) -> ChamberWeight:
    match = KEY_RE.match(key.strip())
    if not match:
        raise serializers.ValidationError(f"Malformed chamber weight key: {key!r}")
    level = int(match.group(1))
    weight = tuple(int(c) for c in match.group(2).split(","))
    return ChamberWeight(level, weight)


class BZEntrySerializer(serializers.Serializer):
    key = serializers.CharField()
    value = serializers.IntegerField()
    pretty = serializers.CharField(required=False)

    def validate_key(self, key: str) -> str:
        parse_key(key)
        return key.strip()


class BZFileSerializer(serializers.Serializer):
    """
    The BZ file format: a Cartan matrix, an optional classical label and one
    entry per chamber weight.

    Validated data carry the parsed BZDatum under "datum".
    """

    cartan = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField()),
        allow_empty=False,
    )
    labels = serializers.ChoiceField(
        choices=[kind.value for kind in ClassicalKind],
        allow_null=True,
        required=False,
    )
    entries = BZEntrySerializer(many=True)

    def validate_cartan(self, rows: list[list[int]]) -> list[list[int]]:
        if any(len(row) != len(rows) for row in rows):
            raise serializers.ValidationError("The Cartan matrix must be square.")
        return rows

    def validate(self, attrs: Any) -> Any:
        kind = ClassicalKind(attrs["labels"]) if attrs.get("labels") else None
        try:
            datum = from_cartan(attrs["cartan"], kind)
        except NotFiniteTypeError:
            raise
        except (CartanMatrixError, ClassicalCoordsError) as e:
            raise serializers.ValidationError({"cartan": str(e)})
        group = weyl_group(datum)

        values: dict[ChamberWeight, int] = {}
        for entry in attrs["entries"]:
            gamma = parse_key(entry["key"])
            if gamma not in group.chamber_index:
                raise serializers.ValidationError({"entries": f"{entry['key']} is not a chamber weight"})
            if gamma in values:
                raise serializers.ValidationError({"entries": f"Duplicate key {entry['key']}"})
            pretty = entry.get("pretty")
            if pretty is not None:
                try:
                    named = parse_chamber_name(datum, pretty)
                except ClassicalCoordsError as e:
                    raise serializers.ValidationError({"entries": str(e)})
                if named != gamma.weight:
                    raise serializers.ValidationError(
                        {"entries": f"Name {pretty!r} does not match key {entry['key']}"}
                    )
            values[gamma] = entry["value"]

        missing = len(group.chamber_weights) - len(values)
        if missing:
            raise serializers.ValidationError({"entries": f"{missing} chamber weights have no value"})
        attrs["datum"] = BZDatum.from_mapping(group, values)
        return attrs
