"""Static equilibrium model of the articulated adaptive foot.

The foot is a rigid arch (heel, apex, mid contact) followed by a chain of
n + 3 revolute joints: the arch joint q0 and the sole joints q1..q_{n+2},
each link of length L. A tendon routed over pulleys couples all joints.
"""
