# Algebras, bimodules, quivers and split algebras
