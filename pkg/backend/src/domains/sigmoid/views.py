"""
Sigmoid Domain Views
Read-only API for radius values, oracle reports and the constants table.
"""

import logging

from rest_framework import status
from rest_framework.exceptions import NotFound
from rest_framework.request import Request
from rest_framework.response import Response
from rest_framework.views import APIView

from src.core.exceptions import RadiusError, UnknownClassError

from .catalog import ClassSpec, get_class_spec
from .serializers import (
    ConstantRowSerializer,
    OracleReportSerializer,
    ParamSetSerializer,
    RadiusResultSerializer,
)
from .services.oracle_service import oracle_radius
from .services.radius_service import compute_radius
from .services.table_service import constants_table

logger = logging.getLogger(__name__)


class ClassParamsMixin:
    """Resolves the class from the URL and its parameters from the query string."""

    def resolve(self, request: Request, class_name: str) -> tuple[ClassSpec, ParamSetSerializer]:
        try:
            spec = get_class_spec(class_name)
        except UnknownClassError as e:
            raise NotFound(e.detail) from e
        serializer = ParamSetSerializer(data=request.query_params, context={"class_id": spec.id})
        return spec, serializer


class RadiusView(ClassParamsMixin, APIView):
    """GET /api/radius/<class>/ - formula radius for one class."""

    def get(self, request: Request, class_name: str) -> Response:
        spec, serializer = self.resolve(request, class_name)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        try:
            result = compute_radius(spec.id, serializer.to_params())
        except RadiusError as e:
            logger.error(f"Radius failed for {spec.id.value}: {e.detail}")
            return Response({"detail": e.detail}, status=status.HTTP_400_BAD_REQUEST)

        return Response(RadiusResultSerializer(result).data)


class VerifyView(ClassParamsMixin, APIView):
    """GET /api/verify/<class>/ - formula radius checked against the oracle."""

    def get(self, request: Request, class_name: str) -> Response:
        spec, serializer = self.resolve(request, class_name)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        try:
            report = oracle_radius(spec.id, serializer.to_params())
        except RadiusError as e:
            logger.error(f"Verification failed for {spec.id.value}: {e.detail}")
            return Response({"detail": e.detail}, status=status.HTTP_400_BAD_REQUEST)

        return Response(OracleReportSerializer(report).data)


class TableView(APIView):
    """GET /api/table/ - quoted and derived constants."""

    def get(self, request: Request) -> Response:
        return Response(ConstantRowSerializer(constants_table(), many=True).data)
