# IVIFN lattice source package
