"""Bundled ray-set data files; access them through kscertify.catalog."""
