use grayzoom::*;

fn main() {
    // Real values for the pinned stage-order regression.
    let img = Image::from_vec(
        4,
        4,
        vec![
            0u8, 30, 60, 90, 40, 70, 100, 130, 80, 110, 140, 170, 120, 150, 180, 210,
        ],
    );
    let out = run_pipeline(&img, &PipelineConfig::new(Kernel::Bilinear, 2.0, 1.0)).unwrap();
    println!("pinned = {:?}", out.samples());

    // Find an input where swapping the filter stages changes the u8 output.
    for trial in 0..6 {
        let img: Image<u8> = match trial {
            0 => Image::from_fn(8, 8, |x, y| if x == 0 && y == 0 { 255 } else { 0 }),
            1 => Image::from_fn(8, 8, |x, y| ((x * 13 + y * 41) % 256) as u8),
            2 => Image::from_fn(8, 8, |x, _| if x < 4 { 0 } else { 255 }),
            3 => Image::from_fn(8, 8, |x, y| (((x + y) % 2) * 255) as u8),
            4 => Image::from_fn(8, 8, |x, y| ((x * x * 7 + y * y * 3) % 256) as u8),
            _ => Image::from_fn(8, 8, |x, y| if (x + 2 * y) % 5 < 2 { 230 } else { 10 }),
        };
        let f = img.to_f32();
        let a = convolve_3x3(
            &convolve_3x3(&f, &average_mask()),
            &unsharp_mask(0.5).unwrap(),
        );
        let b = convolve_3x3(
            &convolve_3x3(&f, &unsharp_mask(0.5).unwrap()),
            &average_mask(),
        );
        let maxdiff = a
            .samples()
            .iter()
            .zip(b.samples())
            .map(|(p, q)| (p - q).abs())
            .fold(0.0f32, f32::max);
        let ua = a.to_u8().unwrap();
        let ub = b.to_u8().unwrap();
        println!(
            "trial {trial}: f32 maxdiff {maxdiff:e}, u8 equal: {}",
            ua == ub
        );
    }
}
