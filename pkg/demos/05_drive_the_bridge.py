"""Driving the interactive bridge programmatically.

Starts the HTTP bridge in-process, opens a session, and performs the same
gestures a user would: grab the red cycle, drag it, grow it, flip its
orientation (which inverts the matrix), then switch to a negative-determinant
matrix and steer the line's endpoints and orientation.

Run:  python3 demos/05_drive_the_bridge.py
"""
import json
import threading
import urllib.request

from cyclesight.bridge import make_server


def post(url, payload):
    req = urllib.request.Request(
        url, data=json.dumps(payload).encode(), headers={"Content-Type": "application/json"}
    )
    with urllib.request.urlopen(req, timeout=10) as resp:
        return json.loads(resp.read())


server = make_server(0)
port = server.server_address[1]
threading.Thread(target=server.serve_forever, daemon=True).start()
base = f"http://127.0.0.1:{port}"
print("bridge listening on", base)

sid = post(f"{base}/session", {})["id"]
msg = f"{base}/session/{sid}/message"

r = post(msg, {"op": "init", "matrix": [2.0, 0.0, 1.0, 1.0], "steps": 12})
print("init:", r["report"]["jordan"], "with", len(r["scene"]["primitives"]), "primitives")

for gesture in (
    {"kind": "translate", "dx": 0.25, "dy": -0.1},
    {"kind": "scale", "factor": 1.4},
    {"kind": "reverse_orientation"},
):
    r = post(msg, {"op": "gesture", "gesture": gesture})
    e = r["report"]["eigenvalues"]
    print(f"{gesture['kind']:>20}: eigenvalues ~ {e[0][0]:+.3f}, {e[1][0]:+.3f}")

r = post(msg, {"op": "gesture", "gesture": {"kind": "set_matrix", "entries": [1.0, 0.0, 0.0, -1.0]}})
print("switched to det<0:", r["report"]["mode"], "theta:", r["report"]["theta_oracle"])

r = post(msg, {"op": "gesture", "gesture": {"kind": "move_endpoint", "which": 1, "dphi": 0.5}})
print("endpoint moved; theta preserved at", round(r["report"]["theta_handle"], 6))

r = post(msg, {"op": "gesture", "gesture": {"kind": "set_theta", "theta": 0.6}})
print("theta set; measured back as", round(r["report"]["theta_oracle"], 6))

# an invalid gesture never changes the session
r = post(msg, {"op": "gesture", "gesture": {"kind": "scale", "factor": 2.0}})
print("scale in line mode ->", r["code"])

server.shutdown()
server.server_close()
print("done")
