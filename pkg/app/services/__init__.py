# Computational services
