class DegenerateTransformException(Exception):
    def __init__(self, x_index: int, z_index: int, x: float, z: float, jacobian: float) -> None:
        self.x_index = x_index
        self.z_index = z_index
        self.jacobian = jacobian
        super().__init__(
            f'Degenerate transform: 1 + phi\'(z) rho = {jacobian:.6g} <= 0 '
            f'at node ({x_index}, {z_index}), x={x:.6g}, z={z:.6g}')
