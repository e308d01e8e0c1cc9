"""
Sigmoid Domain URL Configuration
Routes for radius values, verification reports and the constants table.
"""

from django.urls import path

from .views import RadiusView, TableView, VerifyView

app_name = "sigmoid"

urlpatterns = [
    path("radius/<str:class_name>/", RadiusView.as_view(), name="radius"),
    path("verify/<str:class_name>/", VerifyView.as_view(), name="verify"),
    path("table/", TableView.as_view(), name="table"),
]
