import math

# Vacuum permeability, exact pre-2019 SI value used by the Wheeler constants
MU_0 = 4 * math.pi * 1e-7

# NFC / ISO 14443 carrier
NFC_CARRIER_HZ = 13.56e6

# Annealed copper
COPPER_RESISTIVITY = 1.72e-8  # ohm-meters

MM = 1e-3
PF = 1e-12
UH = 1e-6
MHZ = 1e6
