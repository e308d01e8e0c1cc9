"""
Root URL Configuration for sigmoid-radius.
"""

from django.urls import include, path

urlpatterns = [
    # Radius / verification API
    path("api/", include("src.domains.sigmoid.urls")),
]
