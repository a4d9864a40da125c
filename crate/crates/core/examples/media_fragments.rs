//! Parse spatial and temporal media fragment values.

use oa_kit::anchor::parse_media_fragment;

fn main() {
    for value in [
        "xywh=1,1,5,5",
        "xywh=pixel:160,120,320,240",
        "xywh=percent:25,25,50,50",
        "t=10,20",
        "t=,20",
        "t=npt:00:01:30.5",
        "xywh=1,1,5",
        "t=20,10",
        "track=audio",
    ] {
        match parse_media_fragment(value) {
            Ok(f) => println!("{value:<28} {f:?}"),
            Err(e) => println!("{value:<28} error: {e}"),
        }
    }
}
