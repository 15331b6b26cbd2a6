"""REST API endpoints for the cycinv service."""
