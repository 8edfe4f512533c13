# Exact series and matrix kernel
