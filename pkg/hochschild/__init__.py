# Hochschild complexes, the bigraded decomposition, Ext and the connecting map
