# API v1 test package
