# Exact linear algebra over Q and F_p
