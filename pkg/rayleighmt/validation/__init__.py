
from rayleighmt.validation.finite_number_validator import *
from rayleighmt.validation.material_validator import *
