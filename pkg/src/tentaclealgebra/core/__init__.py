"""Workbench and the component base class."""
