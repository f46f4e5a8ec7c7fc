# Exact arithmetic models: p-adics, quadratic algebras, matrices, reports
