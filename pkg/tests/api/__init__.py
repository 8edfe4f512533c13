# API test package
