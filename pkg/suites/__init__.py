# Verification suites: one module per CLI suite name
